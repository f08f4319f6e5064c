#include "rca/rules.hpp"

#include "rca/rough_context.hpp"

namespace rca {

RoughMeasure::RoughMeasure(std::size_t numerator, std::size_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (numerator > denominator)
    throw Error(ErrorKind::internal, "rough measure numerator exceeds denominator");
}

RoughMeasure::rational RoughMeasure::value() const {
  if (!defined())
    throw Error(ErrorKind::undefined_measure, "premise extent is empty; measure undefined");
  return rational(static_cast<long long>(numerator_), static_cast<long long>(denominator_));
}

std::string RoughMeasure::to_string() const {
  if (!defined()) return "undefined";
  auto k = value();
  if (k.denominator() == 1) return std::to_string(k.numerator());
  return std::to_string(k.numerator()) + "/" + std::to_string(k.denominator());
}

bool implication_holds(const FormalContext& ctx, const Implication& imp) {
  return derive_extent(ctx, imp.premise).is_subset_of(derive_extent(ctx, imp.conclusion));
}

RoughMeasure rough_measure(const FormalContext& ctx, const Implication& imp) {
  const auto premise = derive_extent(ctx, imp.premise);
  const auto both = premise & derive_extent(ctx, imp.conclusion);
  return RoughMeasure(both.size(), premise.size());
}

bool certain_rule(const ApproximationSpace& space, const FormalContext& ctx,
                  const Implication& imp) {
  return implication_holds(lower_context(space, ctx), imp);
}

bool possible_rule(const ApproximationSpace& space, const FormalContext& ctx,
                   const Implication& imp) {
  return implication_holds(upper_context(space, ctx), imp);
}

}  // namespace rca
