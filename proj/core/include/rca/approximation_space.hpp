#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rca/context.hpp"

namespace rca {

/// An approximation space (G, E), with the indiscernibility relation E kept
/// as a partition of G into blocks. Blocks are normalized: members ascend
/// and blocks are ordered by their least member.
class ApproximationSpace {
 public:
  ApproximationSpace() = default;

  /// blocks must be nonempty, pairwise disjoint and cover every object.
  ApproximationSpace(std::vector<std::string> objects,
                     const std::vector<std::vector<std::size_t>>& blocks);

  /// Every object alone in its block (E is equality).
  static ApproximationSpace identity(std::vector<std::string> objects);

  /// All objects in one block.
  static ApproximationSpace total(std::vector<std::string> objects);

  /// Objects are indiscernible when their rows agree on `attributes`.
  static ApproximationSpace by_attributes(const FormalContext& ctx, const AttributeSet& attributes);

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  std::size_t object_count() const noexcept { return objects_.size(); }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<ObjectSet>& blocks() const noexcept { return blocks_; }
  const ObjectSet& block(std::size_t i) const { return blocks_.at(i); }

  /// Index of [g]_E.
  std::size_t block_of(std::size_t object) const;

  bool indiscernible(std::size_t g, std::size_t h) const { return block_of(g) == block_of(h); }

  friend bool operator==(const ApproximationSpace&, const ApproximationSpace&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<ObjectSet> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Throws ErrorKind::universe_mismatch unless the space and context have the
/// same object list.
void require_same_objects(const ApproximationSpace& space, const FormalContext& ctx);

/// Union of the blocks meeting A: the least definable superset.
ObjectSet upper_approx_set(const ApproximationSpace& space, const ObjectSet& objects);

/// Union of the blocks inside A: the greatest definable subset.
ObjectSet lower_approx_set(const ApproximationSpace& space, const ObjectSet& objects);

/// A is a union of blocks.
bool is_definable_set(const ApproximationSpace& space, const ObjectSet& objects);

/// Attributes whose extent Im is definable.
AttributeSet definable_attributes(const ApproximationSpace& space, const FormalContext& ctx);

bool is_definable_context(const ApproximationSpace& space, const FormalContext& ctx);

}  // namespace rca
