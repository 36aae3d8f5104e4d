#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "modlab/element_set.hpp"
#include "modlab/ring.hpp"

namespace modlab {

enum class Sidedness { left, two_sided };

inline const char* to_string(Sidedness s) { return s == Sidedness::left ? "left" : "two-sided"; }

/// An ideal of a FiniteRing, stored by carrier.
class Ideal {
public:
  Ideal() = default;
  Ideal(FiniteRing ring, ElementSet carrier, Sidedness side)
      : ring_(std::move(ring)), carrier_(std::move(carrier)), side_(side) {}

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& carrier() const { return carrier_; }
  Sidedness sidedness() const { return side_; }
  bool contains(Elem e) const { return carrier_.contains(e); }
  bool is_zero() const { return carrier_.size() == 1; }
  bool is_whole() const { return carrier_.is_full(); }
  std::size_t size() const { return carrier_.size(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.carrier_ == b.carrier_;
  }

private:
  FiniteRing ring_;
  ElementSet carrier_;
  Sidedness side_ = Sidedness::left;
};

/// Closure of `gens` under addition. Assumes the generators already satisfy
/// whatever absorption property the caller needs.
inline ElementSet additive_closure(const FiniteRing& R, const ElementSet& gens) {
  ElementSet out(R.order());
  out.insert(R.zero());
  std::vector<Elem> members{R.zero()};
  std::vector<Elem> g = gens.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem x : g) {
      Elem s = R.add(members[i], x);
      if (!out.contains(s)) {
        out.insert(s);
        members.push_back(s);
      }
    }
  return out;
}

/// Smallest ideal of the given sidedness containing `gens`.
inline ElementSet ideal_closure(const FiniteRing& R, const ElementSet& gens, Sidedness side) {
  ElementSet products(R.order());
  gens.for_each([&](Elem x) {
    for (Elem r = 0; r < R.order(); ++r) {
      Elem rx = R.mul(r, x);
      if (side == Sidedness::left) {
        products.insert(rx);
      } else {
        for (Elem s = 0; s < R.order(); ++s) products.insert(R.mul(rx, s));
      }
    }
  });
  return additive_closure(R, products);
}

inline bool is_ideal(const FiniteRing& R, const ElementSet& c, Sidedness side) {
  if (!c.contains(R.zero())) return false;
  bool ok = true;
  c.for_each([&](Elem x) {
    if (!ok) return;
    c.for_each([&](Elem y) { ok = ok && c.contains(R.add(x, y)); });
    ok = ok && c.contains(R.neg(x));
    for (Elem r = 0; r < R.order() && ok; ++r) {
      ok = c.contains(R.mul(r, x));
      if (ok && side == Sidedness::two_sided) ok = c.contains(R.mul(x, r));
    }
  });
  return ok;
}

/// Every ideal of the given sidedness, in canonical order (so the zero ideal
/// comes first and R last). Principal ideals are generated first and then
/// summed pairwise until nothing new appears.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& R, Sidedness side) {
  std::vector<ElementSet> principal;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < R.order(); ++x) {
    ElementSet g(R.order(), {x});
    auto c = ideal_closure(R, g, side);
    if (seen.insert(c).second) principal.push_back(c);
  }
  std::vector<ElementSet> all = principal;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& p : principal) {
      if (p.subset_of(all[i])) continue;
      auto s = additive_closure(R, all[i] | p);
      if (seen.insert(s).second) all.push_back(s);
    }
  std::sort(all.begin(), all.end(), CanonicalLess{});
  std::vector<Ideal> out;
  out.reserve(all.size());
  for (auto& c : all) out.emplace_back(R, std::move(c), side);
  return out;
}

/// I * J: additive closure of all products ij.
inline ElementSet ideal_product(const FiniteRing& R, const ElementSet& I, const ElementSet& J) {
  ElementSet prods(R.order());
  I.for_each([&](Elem i) { J.for_each([&](Elem j) { prods.insert(R.mul(i, j)); }); });
  return additive_closure(R, prods);
}

/// Result of R/I: the quotient ring plus the canonical projection R -> R/I.
struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;
};

/// Cosets are numbered by their smallest representative.
inline QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I, const Caps& caps = {}) {
  if (!same_ring(R, I.ring())) throw InvalidArgument("ideal belongs to a different ring");
  if (!is_ideal(R, I.carrier(), Sidedness::two_sided))
    throw InvalidArgument("quotient needs a two-sided ideal, got " + I.carrier().to_string());
  if (I.is_whole()) throw InvalidArgument("quotient by the improper ideal R");
  const std::size_t n = R.order();
  std::vector<Elem> proj(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != n) continue;
    Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    I.carrier().for_each([&](Elem i) { proj[R.add(x, i)] = idx; });
  }
  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      add[a * q + b] = proj[R.add(reps[a], reps[b])];
      mul[a * q + b] = proj[R.mul(reps[a], reps[b])];
    }
  auto ring = make_raw_ring(std::move(add), std::move(mul), caps, RingKind::quotient,
                            "quotient(" + R.description() + "," + I.carrier().to_string() + ")");
  return {std::move(ring), std::move(proj)};
}

} // namespace modlab
