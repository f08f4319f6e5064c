#pragma once

#include <cstddef>

#include "rca/approximation_space.hpp"
#include "rca/context.hpp"

namespace rca {

/// Ī^E: column m becomes the upper approximation of Im. The least
/// definable context containing ctx.
FormalContext upper_context(const ApproximationSpace& space, const FormalContext& ctx);

/// I_E: column m becomes the lower approximation of Im. The greatest
/// definable context contained in ctx.
FormalContext lower_context(const ApproximationSpace& space, const FormalContext& ctx);

/// ⋂_{m∈B} upper(Im), i.e. B↓ in the upper context. This is the library's
/// meaning of "the objects possibly having B".
ObjectSet extent_upper_free(const ApproximationSpace& space, const FormalContext& ctx,
                            const AttributeSet& attributes);

/// upper(B↓). Always a subset of extent_upper_free.
ObjectSet extent_upper_strict(const ApproximationSpace& space, const FormalContext& ctx,
                              const AttributeSet& attributes);

/// ⋂_{m∈B} lower(Im) = lower(B↓).
ObjectSet extent_lower(const ApproximationSpace& space, const FormalContext& ctx,
                       const AttributeSet& attributes);

bool possibly_has(const ApproximationSpace& space, const FormalContext& ctx, std::size_t object,
                  const AttributeSet& attributes);
bool certainly_has(const ApproximationSpace& space, const FormalContext& ctx, std::size_t object,
                   const AttributeSet& attributes);

enum class ApproxMode { upper, lower, rough };

/// upper: Smyth order (Ī ⊆ J̄); lower: Hoare order (I_E ⊆ J_E); rough:
/// Milner order, both at once.
bool context_order(const ApproximationSpace& space, const FormalContext& lhs,
                   const FormalContext& rhs, ApproxMode mode);

bool contexts_roughly_equal(const ApproximationSpace& space, const FormalContext& lhs,
                            const FormalContext& rhs);

/// A rough formal context, represented by one member together with the
/// (lower, upper) pair that determines the whole class.
class RoughFormalContext {
 public:
  RoughFormalContext(ApproximationSpace space, FormalContext representative);

  const ApproximationSpace& space() const noexcept { return space_; }
  const FormalContext& representative() const noexcept { return representative_; }
  const FormalContext& upper() const noexcept { return upper_; }
  const FormalContext& lower() const noexcept { return lower_; }

  /// Whether ctx belongs to this rough context.
  bool contains(const FormalContext& ctx) const;

  friend bool operator==(const RoughFormalContext& a, const RoughFormalContext& b) {
    return a.space_ == b.space_ && a.upper_ == b.upper_ && a.lower_ == b.lower_;
  }

 private:
  ApproximationSpace space_;
  FormalContext representative_;
  FormalContext upper_;
  FormalContext lower_;
};

RoughFormalContext rough_context(const ApproximationSpace& space, const FormalContext& ctx);

}  // namespace rca
