#include "rca/lattice.hpp"

#include <algorithm>
#include <atomic>

namespace rca {

namespace {

std::uint64_t next_lattice_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

AttributeSet closure(const FormalContext& ctx, const AttributeSet& attributes) {
  return derive_intent(ctx, derive_extent(ctx, attributes));
}

// Lectic successor of a closed set `current`, or nullopt when current = M.
std::optional<AttributeSet> next_closure(const FormalContext& ctx, const AttributeSet& current) {
  const auto n = ctx.attribute_count();
  AttributeSet prefix = current;  // current ∩ {0..i-1} as i walks down
  for (std::size_t i = n; i-- > 0;) {
    if (prefix.contains(i)) {
      prefix.erase(i);
      continue;
    }
    AttributeSet candidate = prefix;
    candidate.insert(i);
    candidate = closure(ctx, candidate);
    // Canonicity: the closure may not add any attribute smaller than i.
    AttributeSet added = candidate - prefix;
    if (added.first() == i) return candidate;
  }
  return std::nullopt;
}

std::vector<CoverPair> compute_covers(const std::vector<FormalConcept>& concepts) {
  std::vector<CoverPair> covers;
  // Canonical order lists larger extents first, so walking j downward from
  // i-1 visits candidate upper neighbours by non-decreasing extent size.
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    std::vector<std::size_t> found;
    for (std::size_t j = i; j-- > 0;) {
      if (!concepts[i].extent.is_proper_subset_of(concepts[j].extent)) continue;
      bool covered = std::none_of(found.begin(), found.end(), [&](std::size_t k) {
        return concepts[k].extent.is_subset_of(concepts[j].extent);
      });
      if (covered) found.push_back(j);
    }
    for (auto j : found) covers.emplace_back(i, j);
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& options) {
  std::vector<AttributeSet> intents;
  std::optional<AttributeSet> current = closure(ctx, ctx.no_attributes());
  while (current) {
    if (intents.size() >= options.max_concepts)
      throw Error(ErrorKind::resource_limit, "concept count exceeds the configured maximum of " +
                                                 std::to_string(options.max_concepts));
    intents.push_back(*current);
    current = next_closure(ctx, *current);
  }

  ConceptLattice lat;
  lat.context_ = ctx;
  lat.id_ = next_lattice_id();
  lat.concepts_.reserve(intents.size());
  for (auto& b : intents) {
    FormalConcept c;
    c.extent = derive_extent(ctx, b);
    c.intent = std::move(b);
    c.lattice_id = lat.id_;
    lat.concepts_.push_back(std::move(c));
  }
  std::sort(lat.concepts_.begin(), lat.concepts_.end(),
            [](const FormalConcept& a, const FormalConcept& b) {
              if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
              return lex_less(a.extent, b.extent);
            });
  for (std::size_t i = 0; i < lat.concepts_.size(); ++i) {
    lat.concepts_[i].index = i;
    lat.by_extent_.emplace(lat.concepts_[i].extent, i);
    lat.by_intent_.emplace(lat.concepts_[i].intent, i);
  }
  lat.covers_ = compute_covers(lat.concepts_);
  return lat;
}

std::vector<std::size_t> ConceptLattice::upper_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : covers_)
    if (lo == i) out.push_back(hi);
  return out;
}

std::vector<std::size_t> ConceptLattice::lower_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : covers_)
    if (hi == i) out.push_back(lo);
  return out;
}

std::optional<std::size_t> ConceptLattice::find_extent(const ObjectSet& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ConceptLattice::find_intent(const AttributeSet& intent) const {
  auto it = by_intent_.find(intent);
  if (it == by_intent_.end()) return std::nullopt;
  return it->second;
}

const FormalConcept& ConceptLattice::at_extent(const ObjectSet& extent) const {
  if (auto i = find_extent(extent)) return concepts_[*i];
  throw Error(ErrorKind::internal, "set " + format_names(context_.object_names(extent)) +
                                       " is not an extent of this lattice");
}

const FormalConcept& ConceptLattice::attribute_concept(std::size_t attribute) const {
  return at_extent(context_.column(attribute));
}

const FormalConcept& ConceptLattice::object_concept(std::size_t object) const {
  return at_extent(derive_extent(context_, context_.row(object)));
}

void ConceptLattice::require_owned(const FormalConcept& c) const {
  if (!owns(c)) throw Error(ErrorKind::lattice_mismatch, "concept does not belong to this lattice");
}

const FormalConcept& ConceptLattice::meet_of(std::span<const std::size_t> indices) const {
  ObjectSet extent = context_.all_objects();
  for (auto i : indices) extent &= concepts_.at(i).extent;
  // An intersection of extents is already an extent.
  return at_extent(extent);
}

const FormalConcept& ConceptLattice::join_of(std::span<const std::size_t> indices) const {
  AttributeSet intent = context_.all_attributes();
  for (auto i : indices) intent &= concepts_.at(i).intent;
  return at_extent(derive_extent(context_, intent));
}

bool concept_leq(const FormalConcept& a, const FormalConcept& b) {
  if (a.lattice_id != b.lattice_id)
    throw Error(ErrorKind::lattice_mismatch, "concepts come from different lattices");
  return a.extent.is_subset_of(b.extent);
}

namespace {

std::vector<std::size_t> owned_indices(const ConceptLattice& lattice,
                                       std::span<const FormalConcept> concepts) {
  std::vector<std::size_t> out;
  out.reserve(concepts.size());
  for (const auto& c : concepts) {
    lattice.require_owned(c);
    out.push_back(c.index);
  }
  return out;
}

}  // namespace

const FormalConcept& lattice_meet(const ConceptLattice& lattice,
                                  std::span<const FormalConcept> concepts) {
  return lattice.meet_of(owned_indices(lattice, concepts));
}

const FormalConcept& lattice_join(const ConceptLattice& lattice,
                                  std::span<const FormalConcept> concepts) {
  return lattice.join_of(owned_indices(lattice, concepts));
}

std::vector<CoverPair> covering_relation(const ConceptLattice& lattice) { return lattice.covers(); }

}  // namespace rca
