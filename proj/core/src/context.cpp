#include "rca/context.hpp"

#include <unordered_set>

namespace rca {

namespace {

void require_unique(const std::vector<std::string>& names, std::string_view what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw Error(ErrorKind::duplicate_name,
                  "duplicate " + std::string(what) + " name '" + n + "'");
}

std::optional<std::size_t> find_in(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes)
    : FormalContext(std::move(objects), std::move(attributes), {}) {}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");

  if (rows_.empty()) rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
  if (rows_.size() != objects_.size())
    throw Error(ErrorKind::invalid_set, "incidence has " + std::to_string(rows_.size()) +
                                            " rows for " + std::to_string(objects_.size()) +
                                            " objects");

  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    if (rows_[g].universe() != attributes_.size())
      throw Error(ErrorKind::invalid_set,
                  "row of object '" + objects_[g] + "' ranges over a different attribute set");
    rows_[g].for_each([&](std::size_t m) { columns_[m].insert(g); });
  }
}

std::optional<std::size_t> FormalContext::find_object(std::string_view name) const {
  return find_in(objects_, name);
}

std::optional<std::size_t> FormalContext::find_attribute(std::string_view name) const {
  return find_in(attributes_, name);
}

std::size_t FormalContext::object_index(std::string_view name) const {
  if (auto i = find_object(name)) return *i;
  throw Error(ErrorKind::unknown_name, "unknown object '" + std::string(name) + "'");
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
  if (auto i = find_attribute(name)) return *i;
  throw Error(ErrorKind::unknown_name, "unknown attribute '" + std::string(name) + "'");
}

ObjectSet FormalContext::object_set(std::span<const std::string> names) const {
  ObjectSet s = no_objects();
  for (const auto& n : names) s.insert(object_index(n));
  return s;
}

AttributeSet FormalContext::attribute_set(std::span<const std::string> names) const {
  AttributeSet s = no_attributes();
  for (const auto& n : names) s.insert(attribute_index(n));
  return s;
}

ObjectSet FormalContext::object_set(std::initializer_list<std::string_view> names) const {
  ObjectSet s = no_objects();
  for (auto n : names) s.insert(object_index(n));
  return s;
}

AttributeSet FormalContext::attribute_set(std::initializer_list<std::string_view> names) const {
  AttributeSet s = no_attributes();
  for (auto n : names) s.insert(attribute_index(n));
  return s;
}

std::vector<std::string> FormalContext::object_names(const ObjectSet& set) const {
  if (set.universe() != object_count())
    throw Error(ErrorKind::invalid_set, "object set does not belong to this context");
  std::vector<std::string> out;
  set.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const AttributeSet& set) const {
  if (set.universe() != attribute_count())
    throw Error(ErrorKind::invalid_set, "attribute set does not belong to this context");
  std::vector<std::string> out;
  set.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
  return out;
}

bool FormalContext::incident(std::size_t object, std::size_t attribute) const {
  return row(object).contains(attribute);
}

const AttributeSet& FormalContext::row(std::size_t object) const {
  if (object >= rows_.size())
    throw Error(ErrorKind::invalid_set, "object index " + std::to_string(object) + " out of range");
  return rows_[object];
}

const ObjectSet& FormalContext::column(std::size_t attribute) const {
  if (attribute >= columns_.size())
    throw Error(ErrorKind::invalid_set,
                "attribute index " + std::to_string(attribute) + " out of range");
  return columns_[attribute];
}

std::size_t FormalContext::incidence_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool same_shape(const FormalContext& a, const FormalContext& b) noexcept {
  return a.objects() == b.objects() && a.attributes() == b.attributes();
}

void require_same_shape(const FormalContext& a, const FormalContext& b) {
  if (!same_shape(a, b))
    throw Error(ErrorKind::universe_mismatch, "contexts differ in objects or attributes");
}

bool incidence_subset(const FormalContext& a, const FormalContext& b) {
  require_same_shape(a, b);
  for (std::size_t g = 0; g < a.object_count(); ++g)
    if (!a.row(g).is_subset_of(b.row(g))) return false;
  return true;
}

AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe() != ctx.object_count())
    throw Error(ErrorKind::invalid_set, "object set does not belong to this context");
  AttributeSet out = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { out &= ctx.row(g); });
  return out;
}

ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe() != ctx.attribute_count())
    throw Error(ErrorKind::invalid_set, "attribute set does not belong to this context");
  ObjectSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { out &= ctx.column(m); });
  return out;
}

std::string format_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

}  // namespace rca
