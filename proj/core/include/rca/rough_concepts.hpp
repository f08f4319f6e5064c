#pragma once

#include <cstddef>
#include <vector>

#include "rca/approximation_space.hpp"
#include "rca/lattice.hpp"
#include "rca/rough_context.hpp"

namespace rca {

/// The three concept lattices of a context under an approximation space and
/// the two conceptual assignments between them. An image is computed
/// intent-first: the base intent B is derived in the approximation context
/// and then closed, (B↓, B↓↑).
class ConceptApproximationMaps {
 public:
  ConceptApproximationMaps(ApproximationSpace space, const FormalContext& ctx,
                           const EnumerationOptions& options = {});

  const ApproximationSpace& space() const noexcept { return space_; }
  const ConceptLattice& base() const noexcept { return base_; }
  const ConceptLattice& upper() const noexcept { return upper_; }
  const ConceptLattice& lower() const noexcept { return lower_; }

  /// Upper-lattice index of the image of base concept i.
  std::size_t to_upper(std::size_t base_index) const { return to_upper_.at(base_index); }
  std::size_t to_lower(std::size_t base_index) const { return to_lower_.at(base_index); }

  const std::vector<std::size_t>& upper_assignment() const noexcept { return to_upper_; }
  const std::vector<std::size_t>& lower_assignment() const noexcept { return to_lower_; }

 private:
  ApproximationSpace space_;
  ConceptLattice base_;
  ConceptLattice upper_;
  ConceptLattice lower_;
  std::vector<std::size_t> to_upper_;
  std::vector<std::size_t> to_lower_;
};

const FormalConcept& concept_upper_approx(const ConceptApproximationMaps& maps,
                                          const FormalConcept& c);
const FormalConcept& concept_lower_approx(const ConceptApproximationMaps& maps,
                                          const FormalConcept& c);

/// ⋁_E d: join in the base lattice of every base concept whose extent lies
/// inside extent(d), for d in the upper lattice.
const FormalConcept& lower_join(const ConceptApproximationMaps& maps, const FormalConcept& d);

/// ⋀_E d: meet in the base lattice of every base concept whose extent
/// contains extent(d), for d in the lower lattice.
const FormalConcept& upper_meet(const ConceptApproximationMaps& maps, const FormalConcept& d);

/// Smyth/Hoare/Milner preorders on base concepts, compared through their
/// images.
bool concept_order(const ConceptApproximationMaps& maps, const FormalConcept& lhs,
                   const FormalConcept& rhs, ApproxMode mode);

struct RoughConceptClass {
  std::vector<std::size_t> members;  // base indices, ascending
  std::size_t upper_image = 0;
  std::size_t lower_image = 0;

  friend bool operator==(const RoughConceptClass&, const RoughConceptClass&) = default;
};

/// Base concepts grouped by their (upper image, lower image) pair, ordered by
/// least member.
std::vector<RoughConceptClass> rough_concept_classes(const ConceptApproximationMaps& maps);

/// One nonempty fiber of an assignment.
struct Fiber {
  std::size_t image = 0;
  std::vector<std::size_t> members;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Kernels of the two assignments, each ordered by image index:
/// indiscernibility of possibility (upper) and of necessity (lower).
struct Kernels {
  std::vector<Fiber> possibility;
  std::vector<Fiber> necessity;
};

Kernels indiscernibility_kernels(const ConceptApproximationMaps& maps);

}  // namespace rca
