#include "rca/rough_context.hpp"

namespace rca {

namespace {

template <class ColumnMap>
FormalContext map_columns(const ApproximationSpace& space, const FormalContext& ctx,
                          ColumnMap&& column_map) {
  require_same_objects(space, ctx);
  std::vector<AttributeSet> rows(ctx.object_count(), ctx.no_attributes());
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    column_map(space, ctx.column(m)).for_each([&](std::size_t g) { rows[g].insert(m); });
  return FormalContext(ctx.objects(), ctx.attributes(), std::move(rows));
}

void check_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe() != ctx.attribute_count())
    throw Error(ErrorKind::invalid_set, "attribute set does not belong to this context");
}

void check_object(const FormalContext& ctx, std::size_t object) {
  if (object >= ctx.object_count())
    throw Error(ErrorKind::unknown_name, "unknown object index " + std::to_string(object));
}

}  // namespace

FormalContext upper_context(const ApproximationSpace& space, const FormalContext& ctx) {
  return map_columns(space, ctx, upper_approx_set);
}

FormalContext lower_context(const ApproximationSpace& space, const FormalContext& ctx) {
  return map_columns(space, ctx, lower_approx_set);
}

ObjectSet extent_upper_free(const ApproximationSpace& space, const FormalContext& ctx,
                            const AttributeSet& attributes) {
  require_same_objects(space, ctx);
  check_attributes(ctx, attributes);
  ObjectSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { out &= upper_approx_set(space, ctx.column(m)); });
  return out;
}

ObjectSet extent_upper_strict(const ApproximationSpace& space, const FormalContext& ctx,
                              const AttributeSet& attributes) {
  require_same_objects(space, ctx);
  return upper_approx_set(space, derive_extent(ctx, attributes));
}

ObjectSet extent_lower(const ApproximationSpace& space, const FormalContext& ctx,
                       const AttributeSet& attributes) {
  require_same_objects(space, ctx);
  check_attributes(ctx, attributes);
  ObjectSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { out &= lower_approx_set(space, ctx.column(m)); });
  return out;
}

bool possibly_has(const ApproximationSpace& space, const FormalContext& ctx, std::size_t object,
                  const AttributeSet& attributes) {
  check_object(ctx, object);
  return extent_upper_free(space, ctx, attributes).contains(object);
}

bool certainly_has(const ApproximationSpace& space, const FormalContext& ctx, std::size_t object,
                   const AttributeSet& attributes) {
  check_object(ctx, object);
  return extent_lower(space, ctx, attributes).contains(object);
}

bool context_order(const ApproximationSpace& space, const FormalContext& lhs,
                   const FormalContext& rhs, ApproxMode mode) {
  require_same_shape(lhs, rhs);
  const bool check_upper = mode != ApproxMode::lower;
  const bool check_lower = mode != ApproxMode::upper;
  if (check_upper && !incidence_subset(upper_context(space, lhs), upper_context(space, rhs)))
    return false;
  if (check_lower && !incidence_subset(lower_context(space, lhs), lower_context(space, rhs)))
    return false;
  return true;
}

bool contexts_roughly_equal(const ApproximationSpace& space, const FormalContext& lhs,
                            const FormalContext& rhs) {
  require_same_shape(lhs, rhs);
  return upper_context(space, lhs) == upper_context(space, rhs) &&
         lower_context(space, lhs) == lower_context(space, rhs);
}

RoughFormalContext::RoughFormalContext(ApproximationSpace space, FormalContext representative)
    : space_(std::move(space)),
      representative_(std::move(representative)),
      upper_(upper_context(space_, representative_)),
      lower_(lower_context(space_, representative_)) {}

bool RoughFormalContext::contains(const FormalContext& ctx) const {
  return same_shape(ctx, representative_) && upper_context(space_, ctx) == upper_ &&
         lower_context(space_, ctx) == lower_;
}

RoughFormalContext rough_context(const ApproximationSpace& space, const FormalContext& ctx) {
  return RoughFormalContext(space, ctx);
}

}  // namespace rca
