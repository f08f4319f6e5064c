#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rca/context.hpp"

namespace rca {

/// A closed extent/intent pair. `index` is the position in the owning
/// lattice; `lattice_id` identifies that lattice.
struct FormalConcept {
  ObjectSet extent;
  AttributeSet intent;
  std::size_t index = 0;
  std::uint64_t lattice_id = 0;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

struct EnumerationOptions {
  std::size_t max_concepts = 100000;
};

using CoverPair = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// All concepts of a context in canonical order: descending extent size,
/// ties broken lexicographically by extent indices. The top concept is
/// always index 0 and the bottom concept is the last one.
class ConceptLattice {
 public:
  const FormalContext& context() const noexcept { return context_; }
  std::uint64_t id() const noexcept { return id_; }

  std::size_t size() const noexcept { return concepts_.size(); }
  const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
  const FormalConcept& operator[](std::size_t i) const { return concepts_.at(i); }

  const FormalConcept& top() const { return concepts_.front(); }
  const FormalConcept& bottom() const { return concepts_.back(); }

  /// Hasse diagram as (lower, upper) index pairs, sorted.
  const std::vector<CoverPair>& covers() const noexcept { return covers_; }
  std::vector<std::size_t> upper_covers(std::size_t i) const;
  std::vector<std::size_t> lower_covers(std::size_t i) const;

  std::optional<std::size_t> find_extent(const ObjectSet& extent) const;
  std::optional<std::size_t> find_intent(const AttributeSet& intent) const;

  /// The concept with this extent; ErrorKind::internal if the set is not an
  /// extent of the lattice's context.
  const FormalConcept& at_extent(const ObjectSet& extent) const;

  /// (m↓, m↓↑) and ({g}↑↓, {g}↑).
  const FormalConcept& attribute_concept(std::size_t attribute) const;
  const FormalConcept& object_concept(std::size_t object) const;

  bool owns(const FormalConcept& c) const noexcept {
    return c.lattice_id == id_ && c.index < concepts_.size();
  }

  /// Throws ErrorKind::lattice_mismatch unless owns(c).
  void require_owned(const FormalConcept& c) const;

  const FormalConcept& meet_of(std::span<const std::size_t> indices) const;
  const FormalConcept& join_of(std::span<const std::size_t> indices) const;

  bool leq(std::size_t a, std::size_t b) const {
    return concepts_.at(a).extent.is_subset_of(concepts_.at(b).extent);
  }

 private:
  friend ConceptLattice enumerate_concepts(const FormalContext&, const EnumerationOptions&);

  FormalContext context_;
  std::uint64_t id_ = 0;
  std::vector<FormalConcept> concepts_;
  std::vector<CoverPair> covers_;
  std::map<ObjectSet, std::size_t, ObjectSet::KeyLess> by_extent_;
  std::map<AttributeSet, std::size_t, AttributeSet::KeyLess> by_intent_;
};

/// Closed attribute sets are generated in lectic order (NextClosure), then
/// sorted into canonical order. Throws ErrorKind::resource_limit once more
/// than options.max_concepts concepts are found.
ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& options = {});

/// Extent inclusion. Both concepts must come from the same lattice.
bool concept_leq(const FormalConcept& a, const FormalConcept& b);

/// Greatest lower bound; the empty family yields the top.
const FormalConcept& lattice_meet(const ConceptLattice& lattice,
                                  std::span<const FormalConcept> concepts);

/// Least upper bound; the empty family yields the bottom.
const FormalConcept& lattice_join(const ConceptLattice& lattice,
                                  std::span<const FormalConcept> concepts);

std::vector<CoverPair> covering_relation(const ConceptLattice& lattice);

}  // namespace rca
