#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rca/errors.hpp"

namespace rca {

struct ObjectTag {};
struct AttributeTag {};

/// A subset of {0, ..., universe-1}. The tag keeps object sets and
/// attribute sets apart at compile time; both share one bitset layout.
template <class Tag>
class IndexSet {
 public:
  using bits_type = boost::dynamic_bitset<std::uint64_t>;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe) {
    for (auto i : members) insert(i);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static IndexSet of(std::size_t universe, const Range& members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(std::size_t i) const noexcept { return i < bits_.size() && bits_.test(i); }

  void insert(std::size_t i) {
    check_index(i);
    bits_.set(i);
  }

  void erase(std::size_t i) {
    check_index(i);
    bits_.reset(i);
  }

  bool is_subset_of(const IndexSet& other) const {
    check_universe(other);
    return bits_.is_subset_of(other.bits_);
  }

  bool is_proper_subset_of(const IndexSet& other) const {
    check_universe(other);
    return bits_.is_proper_subset_of(other.bits_);
  }

  bool intersects(const IndexSet& other) const {
    check_universe(other);
    return bits_.intersects(other.bits_);
  }

  IndexSet& operator&=(const IndexSet& other) {
    check_universe(other);
    bits_ &= other.bits_;
    return *this;
  }

  IndexSet& operator|=(const IndexSet& other) {
    check_universe(other);
    bits_ |= other.bits_;
    return *this;
  }

  IndexSet& operator-=(const IndexSet& other) {
    check_universe(other);
    bits_ -= other.bits_;
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet s = *this;
    s.bits_.flip();
    return s;
  }

  /// Members in ascending order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i)) f(i);
  }

  std::size_t first() const noexcept { return bits_.find_first(); }
  static constexpr std::size_t npos = bits_type::npos;

  const bits_type& bits() const noexcept { return bits_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

  /// Lexicographic comparison of the ascending member lists.
  friend bool lex_less(const IndexSet& a, const IndexSet& b) {
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != bits_type::npos && j != bits_type::npos) {
      if (i != j) return i < j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return i == bits_type::npos && j != bits_type::npos;
  }

  /// Strict weak order usable as a map key (not lexicographic on members).
  struct KeyLess {
    bool operator()(const IndexSet& a, const IndexSet& b) const {
      if (a.universe() != b.universe()) return a.universe() < b.universe();
      return a.bits_ < b.bits_;
    }
  };

 private:
  void check_index(std::size_t i) const {
    if (i >= bits_.size())
      throw Error(ErrorKind::invalid_set, "index " + std::to_string(i) +
                                              " out of range for universe of size " +
                                              std::to_string(bits_.size()));
  }

  void check_universe(const IndexSet& other) const {
    if (other.bits_.size() != bits_.size())
      throw Error(ErrorKind::invalid_set, "set universes differ (" +
                                              std::to_string(bits_.size()) + " vs " +
                                              std::to_string(other.bits_.size()) + ")");
  }

  bits_type bits_;
};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

}  // namespace rca
