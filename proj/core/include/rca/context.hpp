#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rca/index_set.hpp"

namespace rca {

/// A formal context (G, M, I): named objects, named attributes and the
/// incidence between them. Object and attribute order is the construction
/// order and fixes every index used downstream. Immutable once built; both
/// the row view (gI) and the column view (Im) are stored.
class FormalContext {
 public:
  /// The context with no objects and no attributes.
  FormalContext() = default;

  /// Context with an empty incidence relation.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes);

  /// rows[g] is the attribute set of object g; rows.size() must equal the
  /// object count and every row must range over the attribute universe.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_attribute(std::string_view name) const;

  /// Index lookups that throw ErrorKind::unknown_name.
  std::size_t object_index(std::string_view name) const;
  std::size_t attribute_index(std::string_view name) const;

  ObjectSet object_set(std::span<const std::string> names) const;
  AttributeSet attribute_set(std::span<const std::string> names) const;
  ObjectSet object_set(std::initializer_list<std::string_view> names) const;
  AttributeSet attribute_set(std::initializer_list<std::string_view> names) const;

  std::vector<std::string> object_names(const ObjectSet& set) const;
  std::vector<std::string> attribute_names(const AttributeSet& set) const;

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  bool incident(std::size_t object, std::size_t attribute) const;

  /// gI
  const AttributeSet& row(std::size_t object) const;
  /// Im
  const ObjectSet& column(std::size_t attribute) const;

  const std::vector<AttributeSet>& rows() const noexcept { return rows_; }
  std::size_t incidence_count() const noexcept;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

/// Same objects and same attributes, in the same order.
bool same_shape(const FormalContext& a, const FormalContext& b) noexcept;

/// Throws ErrorKind::universe_mismatch unless same_shape(a, b).
void require_same_shape(const FormalContext& a, const FormalContext& b);

/// Relation inclusion a ⊆ b; the contexts must share their shape.
bool incidence_subset(const FormalContext& a, const FormalContext& b);

/// A↑: attributes shared by every object of A (all of M for empty A).
AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& objects);

/// B↓: objects having every attribute of B (all of G for empty B).
ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& attributes);

/// Rendering helper: "{a,b,c}" in index order.
std::string format_names(const std::vector<std::string>& names);

}  // namespace rca
