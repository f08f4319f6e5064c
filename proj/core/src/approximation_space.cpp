#include "rca/approximation_space.hpp"

#include <algorithm>
#include <map>

namespace rca {

namespace {

constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

void check_universe(const ApproximationSpace& space, const ObjectSet& objects) {
  if (objects.universe() != space.object_count())
    throw Error(ErrorKind::invalid_set, "object set does not belong to this approximation space");
}

}  // namespace

ApproximationSpace::ApproximationSpace(std::vector<std::string> objects,
                                       const std::vector<std::vector<std::size_t>>& blocks)
    : objects_(std::move(objects)), block_of_(objects_.size(), unassigned) {
  const auto n = objects_.size();
  std::vector<ObjectSet> sets;
  for (const auto& members : blocks) {
    if (members.empty()) throw Error(ErrorKind::invalid_set, "empty indiscernibility block");
    ObjectSet s(n);
    for (auto g : members) {
      if (g >= n)
        throw Error(ErrorKind::invalid_set, "object index " + std::to_string(g) + " out of range");
      if (block_of_[g] != unassigned)
        throw Error(ErrorKind::invalid_set, "object '" + objects_[g] + "' appears in two blocks");
      block_of_[g] = 0;
      s.insert(g);
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t g = 0; g < n; ++g)
    if (block_of_[g] == unassigned)
      throw Error(ErrorKind::invalid_set, "object '" + objects_[g] + "' not covered by any block");

  std::sort(sets.begin(), sets.end(),
            [](const ObjectSet& a, const ObjectSet& b) { return a.first() < b.first(); });
  blocks_ = std::move(sets);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    blocks_[b].for_each([&](std::size_t g) { block_of_[g] = b; });
}

ApproximationSpace ApproximationSpace::identity(std::vector<std::string> objects) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t g = 0; g < objects.size(); ++g) blocks.push_back({g});
  return ApproximationSpace(std::move(objects), blocks);
}

ApproximationSpace ApproximationSpace::total(std::vector<std::string> objects) {
  std::vector<std::vector<std::size_t>> blocks;
  if (!objects.empty()) {
    blocks.emplace_back();
    for (std::size_t g = 0; g < objects.size(); ++g) blocks.back().push_back(g);
  }
  return ApproximationSpace(std::move(objects), blocks);
}

ApproximationSpace ApproximationSpace::by_attributes(const FormalContext& ctx,
                                                     const AttributeSet& attributes) {
  if (attributes.universe() != ctx.attribute_count())
    throw Error(ErrorKind::invalid_set, "attribute set does not belong to this context");
  std::map<AttributeSet, std::size_t, AttributeSet::KeyLess> signature;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    auto key = ctx.row(g) & attributes;
    auto [it, fresh] = signature.try_emplace(std::move(key), blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(g);
  }
  return ApproximationSpace(ctx.objects(), blocks);
}

std::size_t ApproximationSpace::block_of(std::size_t object) const {
  if (object >= block_of_.size())
    throw Error(ErrorKind::invalid_set, "object index " + std::to_string(object) + " out of range");
  return block_of_[object];
}

void require_same_objects(const ApproximationSpace& space, const FormalContext& ctx) {
  if (space.objects() != ctx.objects())
    throw Error(ErrorKind::universe_mismatch,
                "approximation space and context have different object sets");
}

ObjectSet upper_approx_set(const ApproximationSpace& space, const ObjectSet& objects) {
  check_universe(space, objects);
  ObjectSet out(space.object_count());
  for (const auto& b : space.blocks())
    if (b.intersects(objects)) out |= b;
  return out;
}

ObjectSet lower_approx_set(const ApproximationSpace& space, const ObjectSet& objects) {
  check_universe(space, objects);
  ObjectSet out(space.object_count());
  for (const auto& b : space.blocks())
    if (b.is_subset_of(objects)) out |= b;
  return out;
}

bool is_definable_set(const ApproximationSpace& space, const ObjectSet& objects) {
  check_universe(space, objects);
  for (const auto& b : space.blocks())
    if (b.intersects(objects) && !b.is_subset_of(objects)) return false;
  return true;
}

AttributeSet definable_attributes(const ApproximationSpace& space, const FormalContext& ctx) {
  require_same_objects(space, ctx);
  AttributeSet out = ctx.no_attributes();
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (is_definable_set(space, ctx.column(m))) out.insert(m);
  return out;
}

bool is_definable_context(const ApproximationSpace& space, const FormalContext& ctx) {
  return definable_attributes(space, ctx).is_full();
}

}  // namespace rca
