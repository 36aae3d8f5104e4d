#pragma once

// Brute-force reference implementations, independent of the engine's search
// strategies. Only suitable for very small modules.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modlab/modlab.hpp"

namespace oracle {

using modlab::Elem;
using modlab::FiniteModule;

inline bool closed_subset(const FiniteModule& M, const std::vector<bool>& in) {
  if (!in[M.zero()]) return false;
  const auto& R = M.ring();
  for (Elem a = 0; a < M.order(); ++a) {
    if (!in[a]) continue;
    for (Elem b = 0; b < M.order(); ++b)
      if (in[b] && !in[M.add(a, b)]) return false;
    for (Elem r = 0; r < R.order(); ++r)
      if (!in[M.act(r, a)]) return false;
  }
  return true;
}

/// Every subset of M closed under the module operations, as bitmasks.
inline std::vector<std::uint64_t> powerset_submodules(const FiniteModule& M) {
  std::vector<std::uint64_t> out;
  const std::size_t n = M.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    if (closed_subset(M, in)) out.push_back(mask);
  }
  return out;
}

inline std::uint64_t mask_of(const modlab::ElementSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](Elem e) { m |= std::uint64_t{1} << e; });
  return m;
}

inline bool linear(const FiniteModule& M, const FiniteModule& N, const std::vector<Elem>& f) {
  for (Elem a = 0; a < M.order(); ++a) {
    for (Elem b = 0; b < M.order(); ++b)
      if (f[M.add(a, b)] != N.add(f[a], f[b])) return false;
    for (Elem r = 0; r < M.ring().order(); ++r)
      if (f[M.act(r, a)] != N.act(r, f[a])) return false;
  }
  return true;
}

/// All |N|^|M| functions, filtered by linearity.
inline std::vector<std::vector<Elem>> all_function_homs(const FiniteModule& M, const FiniteModule& N) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(M.order(), 0);
  while (true) {
    if (linear(M, N, f)) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == N.order()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

/// Smallest k <= bound such that some k maps M -> N are jointly injective,
/// searched over k-subsets of the brute-force hom set.
inline std::optional<std::size_t> smallest_embedding_power(const FiniteModule& M, const FiniteModule& N,
                                                           std::size_t bound) {
  auto homs = all_function_homs(M, N);
  if (M.is_zero_module()) return 0;
  // Elements killed by every map can never be separated.
  for (Elem x = 0; x < M.order(); ++x) {
    if (x == M.zero()) continue;
    bool hit = false;
    for (const auto& h : homs) hit = hit || h[x] != N.zero();
    if (!hit) return std::nullopt;
  }
  auto injective = [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<Elem>> seen;
    for (Elem x = 0; x < M.order(); ++x) {
      std::vector<Elem> t;
      for (auto i : pick) t.push_back(homs[i][x]);
      for (const auto& s : seen)
        if (s == t) return false;
      seen.push_back(t);
    }
    return true;
  };
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t k) {
    if (pick.size() == k) return injective(pick);
    for (std::size_t i = start; i < homs.size(); ++i) {
      pick.push_back(i);
      if (search(i + 1, k)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= bound; ++k)
    if (search(0, k)) return k;
  return std::nullopt;
}

} // namespace oracle
