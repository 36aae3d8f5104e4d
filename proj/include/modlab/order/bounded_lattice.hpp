#pragma once

#include <optional>
#include <vector>

#include "modlab/order/poset.hpp"

namespace modlab::order {

/// Finite bounded lattice: an order plus join/meet tables.
class BoundedLattice {
public:
  BoundedLattice() = default;

  /// Derives joins and meets from the order; throws if some pair lacks a
  /// least upper or greatest lower bound.
  explicit BoundedLattice(FinitePoset order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    if (n == 0) throw InvalidArgument("empty lattice");
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto j = least_upper(a, b);
        auto m = greatest_lower(a, b);
        if (!j) throw AxiomViolation("join exists", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (!m) throw AxiomViolation("meet exists", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        join_[a * n + b] = *j;
        meet_[a * n + b] = *m;
      }
    bottom_ = meet_all();
    top_ = join_all();
    verify_laws();
  }

  std::size_t size() const { return order_.size(); }
  bool le(std::size_t a, std::size_t b) const { return order_.le(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const FinitePoset& order() const { return order_; }

  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
      if (a == bottom_) continue;
      bool minimal = true;
      for (std::size_t z = 0; z < size() && minimal; ++z)
        if (z != bottom_ && z != a && le(z, a)) minimal = false;
      if (minimal) out.push_back(a);
    }
    return out;
  }

private:
  std::optional<std::size_t> least_upper(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> best;
    for (std::size_t u = 0; u < size(); ++u) {
      if (!le(a, u) || !le(b, u)) continue;
      if (!best || le(u, *best)) best = u;
    }
    if (!best) return best;
    for (std::size_t u = 0; u < size(); ++u)
      if (le(a, u) && le(b, u) && !le(*best, u)) return std::nullopt;
    return best;
  }

  std::optional<std::size_t> greatest_lower(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> best;
    for (std::size_t l = 0; l < size(); ++l) {
      if (!le(l, a) || !le(l, b)) continue;
      if (!best || le(*best, l)) best = l;
    }
    if (!best) return best;
    for (std::size_t l = 0; l < size(); ++l)
      if (le(l, a) && le(l, b) && !le(l, *best)) return std::nullopt;
    return best;
  }

  std::size_t meet_all() const {
    std::size_t m = 0;
    for (std::size_t a = 1; a < size(); ++a) m = meet(m, a);
    return m;
  }
  std::size_t join_all() const {
    std::size_t j = 0;
    for (std::size_t a = 1; a < size(); ++a) j = join(j, a);
    return j;
  }

  void verify_laws() const {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!le(bottom_, a) || !le(a, top_)) throw AxiomViolation("bounded", std::to_string(a));
      for (std::size_t b = 0; b < size(); ++b) {
        if (join(a, b) != join(b, a) || meet(a, b) != meet(b, a))
          throw AxiomViolation("commutativity", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a)
          throw AxiomViolation("absorption", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }

  FinitePoset order_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// [y, x] with the index map back into the parent lattice.
struct Interval {
  BoundedLattice lattice;
  std::vector<std::size_t> to_parent;
  std::vector<std::size_t> from_parent; // size of parent; npos outside the interval

  static constexpr std::size_t npos = std::size_t(-1);
};

inline Interval interval(const BoundedLattice& L, std::size_t y, std::size_t x) {
  if (!L.le(y, x)) throw InvalidArgument("interval bounds are not ordered");
  Interval out;
  out.from_parent.assign(L.size(), Interval::npos);
  for (std::size_t z = 0; z < L.size(); ++z)
    if (L.le(y, z) && L.le(z, x)) {
      out.from_parent[z] = out.to_parent.size();
      out.to_parent.push_back(z);
    }
  out.lattice = BoundedLattice(L.order().induced(out.to_parent));
  return out;
}

} // namespace modlab::order
