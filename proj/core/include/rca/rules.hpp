#pragma once

#include <cstddef>
#include <string>

#include <boost/rational.hpp>

#include "rca/approximation_space.hpp"
#include "rca/context.hpp"

namespace rca {

/// U → V over one context's attributes.
struct Implication {
  AttributeSet premise;
  AttributeSet conclusion;
};

/// |U↓ ∩ V↓| / |U↓| kept as raw counts. With an empty premise extent the
/// measure is undefined rather than 1.
class RoughMeasure {
 public:
  using rational = boost::rational<long long>;

  RoughMeasure(std::size_t numerator, std::size_t denominator);

  std::size_t numerator() const noexcept { return numerator_; }
  std::size_t denominator() const noexcept { return denominator_; }

  bool defined() const noexcept { return denominator_ != 0; }

  /// Reduced value k; throws ErrorKind::undefined_measure when !defined().
  rational value() const;

  bool is_one() const noexcept { return defined() && numerator_ == denominator_; }

  /// "2/3", "1", "0", or "undefined".
  std::string to_string() const;

  friend bool operator==(const RoughMeasure&, const RoughMeasure&) = default;

 private:
  std::size_t numerator_;
  std::size_t denominator_;
};

/// U↓ ⊆ V↓.
bool implication_holds(const FormalContext& ctx, const Implication& imp);

RoughMeasure rough_measure(const FormalContext& ctx, const Implication& imp);

/// The implication holds in the lower approximation context.
bool certain_rule(const ApproximationSpace& space, const FormalContext& ctx,
                  const Implication& imp);

/// The implication holds in the upper approximation context.
bool possible_rule(const ApproximationSpace& space, const FormalContext& ctx,
                   const Implication& imp);

}  // namespace rca
