#pragma once

// Actions of a finite poset P on a finite bounded lattice L.
//
// An action is a table s -> x -> (s acting on x) that is monotone in s,
// monotone in x and deflationary (the result lies below x). First and prime
// elements are decided by exhaustive scans over the table.

#include <optional>
#include <string>
#include <vector>

#include "modlab/order/bounded_lattice.hpp"

namespace modlab::order {

class PosetAction {
public:
  PosetAction() = default;

  /// table[s * |L| + x]. Verifies the three action conditions.
  PosetAction(FinitePoset P, BoundedLattice L, std::vector<std::size_t> table)
      : P_(std::move(P)), L_(std::move(L)), table_(std::move(table)) {
    const std::size_t np = P_.size(), nl = L_.size();
    if (table_.size() != np * nl) throw InvalidArgument("action table has wrong shape");
    auto w = [](std::size_t a, std::size_t b, std::size_t c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    };
    for (std::size_t s = 0; s < np; ++s)
      for (std::size_t x = 0; x < nl; ++x) {
        if (act(s, x) >= nl) throw InvalidArgument("action value out of range");
        if (!L_.le(act(s, x), x)) throw AxiomViolation("deflationary (s.x <= x)", w(s, x, 0));
        for (std::size_t y = 0; y < nl; ++y)
          if (L_.le(x, y) && !L_.le(act(s, x), act(s, y)))
            throw AxiomViolation("monotone in the lattice argument", w(s, x, y));
        for (std::size_t t = 0; t < np; ++t)
          if (P_.le(s, t) && !L_.le(act(s, x), act(t, x)))
            throw AxiomViolation("monotone in the poset argument", w(s, t, x));
      }
  }

  const FinitePoset& poset() const { return P_; }
  const BoundedLattice& lattice() const { return L_; }
  std::size_t act(std::size_t s, std::size_t x) const { return table_[s * L_.size() + x]; }
  const std::vector<std::size_t>& table() const { return table_; }

private:
  FinitePoset P_;
  BoundedLattice L_;
  std::vector<std::size_t> table_;
};

/// (s, z) with 0 != z <= x, s.z = 0 and s.x != 0.
struct FirstWitness {
  std::size_t s;
  std::size_t z;
};

inline std::optional<FirstWitness> first_witness(const PosetAction& a, std::size_t x) {
  const auto& L = a.lattice();
  if (x == L.bottom()) throw InvalidArgument("firstness is defined for nonzero elements only");
  for (std::size_t s = 0; s < a.poset().size(); ++s) {
    if (a.act(s, x) == L.bottom()) continue;
    for (std::size_t z = 0; z < L.size(); ++z)
      if (z != L.bottom() && L.le(z, x) && a.act(s, z) == L.bottom()) return FirstWitness{s, z};
  }
  return std::nullopt;
}

inline bool is_first(const PosetAction& a, std::size_t x) { return !first_witness(a, x).has_value(); }

/// (s, z) with s.z <= x, s.1 not <= x and z not <= x.
struct PrimeWitness {
  std::size_t s;
  std::size_t z;
};

inline std::optional<PrimeWitness> prime_witness(const PosetAction& a, std::size_t x) {
  const auto& L = a.lattice();
  for (std::size_t s = 0; s < a.poset().size(); ++s) {
    if (L.le(a.act(s, L.top()), x)) continue;
    for (std::size_t z = 0; z < L.size(); ++z)
      if (L.le(a.act(s, z), x) && !L.le(z, x)) return PrimeWitness{s, z};
  }
  return std::nullopt;
}

inline bool is_prime(const PosetAction& a, std::size_t x) { return !prime_witness(a, x).has_value(); }

/// The P-action a.x := f(a).x induced by a monotone f: P -> Q.
inline PosetAction pullback(const PosetAction& q_action, const FinitePoset& P, const std::vector<std::size_t>& f) {
  if (!is_monotone(P, q_action.poset(), f)) throw InvalidArgument("pullback along a non-monotone map");
  const std::size_t nl = q_action.lattice().size();
  std::vector<std::size_t> t(P.size() * nl);
  for (std::size_t s = 0; s < P.size(); ++s)
    for (std::size_t x = 0; x < nl; ++x) t[s * nl + x] = q_action.act(f[s], x);
  return PosetAction(P, q_action.lattice(), std::move(t));
}

/// Restriction to the subposet induced on `subset`.
inline PosetAction restrict_to_subposet(const PosetAction& a, const std::vector<std::size_t>& subset) {
  return pullback(a, a.poset().induced(subset), subset);
}

/// The action restricted to [0, x]; well defined since s.z <= z.
struct RestrictedAction {
  PosetAction action;
  Interval interval;
};

inline RestrictedAction restrict_action(const PosetAction& a, std::size_t x) {
  auto iv = interval(a.lattice(), a.lattice().bottom(), x);
  const std::size_t k = iv.to_parent.size();
  std::vector<std::size_t> t(a.poset().size() * k);
  for (std::size_t s = 0; s < a.poset().size(); ++s)
    for (std::size_t i = 0; i < k; ++i) t[s * k + i] = iv.from_parent[a.act(s, iv.to_parent[i])];
  return {PosetAction(a.poset(), iv.lattice, std::move(t)), std::move(iv)};
}

} // namespace modlab::order
