#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "modlab/order/action.hpp"

namespace modlab::order {

using Rng = std::mt19937_64;

/// Random poset whose relation only goes from lower to higher index.
inline FinitePoset random_poset(Rng& rng, std::size_t n, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return FinitePoset::from_relation(n, pairs);
}

/// Random intersection-closed family of subsets of a small ground set,
/// ordered by inclusion. Such a family containing the ground set is a lattice;
/// M3, N5, chains and Boolean lattices all arise this way. Subsets are added
/// one at a time until a size drawn from [2, max_size] is reached.
inline BoundedLattice random_lattice(Rng& rng, std::size_t max_size = 8) {
  std::uniform_int_distribution<unsigned> ground_dist(1, 4);
  std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, max_size));
  const unsigned g = ground_dist(rng);
  const unsigned full = (1u << g) - 1;
  const std::size_t target = size_dist(rng);
  std::uniform_int_distribution<unsigned> subset(0, full);
  auto closure = [](std::set<unsigned> fam) {
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<unsigned> cur(fam.begin(), fam.end());
      for (unsigned a : cur)
        for (unsigned b : cur) grew = fam.insert(a & b).second || grew;
    }
    return fam;
  };
  std::set<unsigned> fam{full};
  for (int attempt = 0; attempt < 64 && fam.size() < target; ++attempt) {
    auto next = fam;
    next.insert(subset(rng));
    next = closure(std::move(next));
    if (next.size() <= max_size) fam = std::move(next);
  }
  if (fam.size() == 1) fam.insert(0);
  std::vector<unsigned> el(fam.begin(), fam.end());
  const std::size_t n = el.size();
  std::vector<char> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (el[i] & el[j]) == el[i];
  return BoundedLattice(FinitePoset(n, std::move(m)));
}

/// Random action: elements of P are processed bottom-up and each s acts by
/// x -> (join of t.x over t < s) v (join of the a in a random set A with a <= x).
/// Both terms are monotone and deflationary, so every axiom holds.
inline PosetAction random_action(Rng& rng, const FinitePoset& P, const BoundedLattice& L) {
  const std::size_t np = P.size(), nl = L.size();
  std::vector<std::size_t> order(np);
  for (std::size_t i = 0; i < np; ++i) order[i] = i;
  auto below = [&](std::size_t s) {
    std::size_t c = 0;
    for (std::size_t t = 0; t < np; ++t) c += P.le(t, s);
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below(a) < below(b); });
  std::vector<std::size_t> t(np * nl, L.bottom());
  std::bernoulli_distribution coin(0.3);
  for (std::size_t s : order) {
    std::vector<std::size_t> A;
    for (std::size_t a = 0; a < nl; ++a)
      if (coin(rng)) A.push_back(a);
    for (std::size_t x = 0; x < nl; ++x) {
      std::size_t v = L.bottom();
      for (std::size_t u = 0; u < np; ++u)
        if (u != s && P.le(u, s)) v = L.join(v, t[u * nl + x]);
      for (std::size_t a : A)
        if (L.le(a, x)) v = L.join(v, a);
      t[s * nl + x] = v;
    }
  }
  return PosetAction(P, L, std::move(t));
}

/// Random order-preserving map P -> Q; falls back to a constant map.
inline std::vector<std::size_t> random_monotone_map(Rng& rng, const FinitePoset& P, const FinitePoset& Q) {
  std::uniform_int_distribution<std::size_t> pick(0, Q.size() - 1);
  std::vector<std::size_t> f(P.size());
  for (int attempt = 0; attempt < 200; ++attempt) {
    for (auto& v : f) v = pick(rng);
    if (is_monotone(P, Q, f)) return f;
  }
  std::fill(f.begin(), f.end(), pick(rng));
  return f;
}

} // namespace modlab::order
