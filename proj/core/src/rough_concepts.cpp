#include "rca/rough_concepts.hpp"

#include <map>

namespace rca {

namespace {

std::size_t image_index(const ConceptLattice& target, const AttributeSet& base_intent) {
  const auto extent = derive_extent(target.context(), base_intent);
  auto i = target.find_extent(extent);
  if (!i)
    throw Error(ErrorKind::internal,
                "image extent " + format_names(target.context().object_names(extent)) +
                    " missing from the approximation lattice");
  return *i;
}

std::vector<Fiber> fibers(const std::vector<std::size_t>& assignment) {
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < assignment.size(); ++i) grouped[assignment[i]].push_back(i);
  std::vector<Fiber> out;
  for (auto& [image, members] : grouped) out.push_back({image, std::move(members)});
  return out;
}

}  // namespace

ConceptApproximationMaps::ConceptApproximationMaps(ApproximationSpace space,
                                                   const FormalContext& ctx,
                                                   const EnumerationOptions& options)
    : space_(std::move(space)),
      base_(enumerate_concepts(ctx, options)),
      upper_(enumerate_concepts(upper_context(space_, ctx), options)),
      lower_(enumerate_concepts(lower_context(space_, ctx), options)) {
  to_upper_.reserve(base_.size());
  to_lower_.reserve(base_.size());
  for (const auto& c : base_.concepts()) {
    to_upper_.push_back(image_index(upper_, c.intent));
    to_lower_.push_back(image_index(lower_, c.intent));
  }
}

const FormalConcept& concept_upper_approx(const ConceptApproximationMaps& maps,
                                          const FormalConcept& c) {
  maps.base().require_owned(c);
  return maps.upper()[maps.to_upper(c.index)];
}

const FormalConcept& concept_lower_approx(const ConceptApproximationMaps& maps,
                                          const FormalConcept& c) {
  maps.base().require_owned(c);
  return maps.lower()[maps.to_lower(c.index)];
}

const FormalConcept& lower_join(const ConceptApproximationMaps& maps, const FormalConcept& d) {
  maps.upper().require_owned(d);
  std::vector<std::size_t> below;
  for (const auto& c : maps.base().concepts())
    if (c.extent.is_subset_of(d.extent)) below.push_back(c.index);
  return maps.base().join_of(below);
}

const FormalConcept& upper_meet(const ConceptApproximationMaps& maps, const FormalConcept& d) {
  maps.lower().require_owned(d);
  std::vector<std::size_t> above;
  for (const auto& c : maps.base().concepts())
    if (d.extent.is_subset_of(c.extent)) above.push_back(c.index);
  return maps.base().meet_of(above);
}

bool concept_order(const ConceptApproximationMaps& maps, const FormalConcept& lhs,
                   const FormalConcept& rhs, ApproxMode mode) {
  maps.base().require_owned(lhs);
  maps.base().require_owned(rhs);
  const bool upper_ok = maps.upper().leq(maps.to_upper(lhs.index), maps.to_upper(rhs.index));
  const bool lower_ok = maps.lower().leq(maps.to_lower(lhs.index), maps.to_lower(rhs.index));
  switch (mode) {
    case ApproxMode::upper: return upper_ok;
    case ApproxMode::lower: return lower_ok;
    case ApproxMode::rough: return upper_ok && lower_ok;
  }
  return false;
}

std::vector<RoughConceptClass> rough_concept_classes(const ConceptApproximationMaps& maps) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  std::vector<RoughConceptClass> out;
  for (std::size_t i = 0; i < maps.base().size(); ++i) {
    auto key = std::make_pair(maps.to_upper(i), maps.to_lower(i));
    auto [it, fresh] = slot.try_emplace(key, out.size());
    if (fresh) out.push_back({{}, key.first, key.second});
    out[it->second].members.push_back(i);
  }
  return out;
}

Kernels indiscernibility_kernels(const ConceptApproximationMaps& maps) {
  return {fibers(maps.upper_assignment()), fibers(maps.lower_assignment())};
}

}  // namespace rca
