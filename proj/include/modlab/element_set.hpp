#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include "modlab/config.hpp"

namespace modlab {

/// A subset of the elements {0, ..., universe_size-1} of some finite carrier.
///
/// Ideals, submodules and lattice elements are all stored as ElementSets. The
/// canonical order (used wherever a result list must be reproducible) sorts
/// by cardinality first, then lexicographically by the sorted element list.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size) : bits_(universe_size) {}
  ElementSet(std::size_t universe_size, std::initializer_list<Elem> elems) : bits_(universe_size) {
    for (Elem e : elems) insert(e);
  }
  template <class Range>
  static ElementSet from(std::size_t universe_size, const Range& elems) {
    ElementSet s(universe_size);
    for (auto e : elems) s.insert(static_cast<Elem>(e));
    return s;
  }
  static ElementSet full(std::size_t universe_size) {
    ElementSet s(universe_size);
    s.bits_.set();
    return s;
  }

  std::size_t universe_size() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }
  bool contains(Elem e) const { return bits_.test(e); }

  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }

  ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      f(static_cast<Elem>(i));
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  /// Smallest element, or universe_size() when empty.
  Elem first() const {
    auto i = bits_.find_first();
    return i == Bits::npos ? static_cast<Elem>(bits_.size()) : static_cast<Elem>(i);
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

  /// Canonical order: by size, then lexicographically by sorted elements.
  friend std::strong_ordering canonical_compare(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != Bits::npos && j != Bits::npos) {
      if (i != j) return i <=> j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t seed = bits_.size();
    std::vector<Bits::block_type> blocks(bits_.num_blocks());
    boost::to_block_range(bits_, blocks.begin());
    boost::hash_range(seed, blocks.begin(), blocks.end());
    return seed;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_elem = true;
    for_each([&](Elem e) {
      if (!first_elem) out += ",";
      out += std::to_string(e);
      first_elem = false;
    });
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const ElementSet& s) { return os << s.to_string(); }

private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return canonical_compare(a, b) < 0; }
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace modlab
