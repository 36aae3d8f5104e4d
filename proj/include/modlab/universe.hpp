#pragma once

#include <string>
#include <vector>

#include "modlab/structure.hpp"

namespace modlab {

struct UniverseParams {
  /// Largest number of base modules in a direct sum; 1 keeps only the base.
  std::size_t depth = 2;
  bool operator==(const UniverseParams&) const = default;
};

/// A finite family of modules over one ring, standing in for R-Mod in every
/// class-level check. Any verdict computed over it holds at universe scale only.
struct Universe {
  FiniteRing ring;
  std::vector<FiniteModule> modules;
  /// One representative per isomorphism class of simple modules.
  std::vector<FiniteModule> simples;
  UniverseParams params;

  std::size_t size() const { return modules.size(); }

  /// Ad hoc universe from an explicit list. Simple representatives are picked
  /// from the list.
  static Universe from_modules(const FiniteRing& R, std::vector<FiniteModule> mods) {
    Universe u;
    u.ring = R;
    u.params.depth = 0;
    for (const auto& m : mods) require_same_ring(R, m.ring());
    u.modules = std::move(mods);
    for (const auto& m : u.modules)
      if (is_simple_module(m)) {
        bool fresh = true;
        for (const auto& s : u.simples) fresh = fresh && !are_isomorphic(s, m);
        if (fresh) u.simples.push_back(m);
      }
    return u;
  }
};

/// Every simple module up to isomorphism: R/I for the maximal left ideals I.
inline std::vector<FiniteModule> simple_modules(const FiniteRing& R) {
  auto RR = regular_module(R);
  auto L = enumerate_submodules(RR);
  std::vector<FiniteModule> out;
  for (auto c : L.coatoms()) {
    auto q = quotient_module(L[c]).module;
    bool fresh = true;
    for (const auto& s : out) fresh = fresh && !are_isomorphic(s, q);
    if (fresh) out.push_back(q);
  }
  return out;
}

namespace detail {
inline bool push_if_new(std::vector<FiniteModule>& list, const FiniteModule& m) {
  for (const auto& x : list)
    if (are_isomorphic(x, m)) return false;
  list.push_back(m);
  return true;
}

inline void multisets(std::size_t n, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, size, i, cur, out);
    cur.pop_back();
  }
}
} // namespace detail

/// Deterministic universe: the regular module, its nonzero quotients R/I (which
/// include every simple module), then direct sums of up to `depth` of these
/// within the module-order cap. Isomorphic duplicates are dropped.
inline Universe generate_universe(const FiniteRing& R, UniverseParams params = {}, const Caps& caps = {}) {
  Universe u;
  u.ring = R;
  u.params = params;
  auto RR = regular_module(R, caps);
  std::vector<FiniteModule> base{RR};
  auto L = enumerate_submodules(RR);
  for (std::size_t i = 1; i + 1 < L.size(); ++i) detail::push_if_new(base, quotient_module(L[i]).module);
  u.modules = base;
  for (std::size_t k = 2; k <= params.depth; ++k) {
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    detail::multisets(base.size(), k, 0, cur, combos);
    for (const auto& c : combos) {
      std::size_t order = 1;
      bool fits = true;
      for (auto i : c) {
        order *= base[i].order();
        fits = fits && order <= caps.module_order;
      }
      if (!fits) continue;
      std::vector<FiniteModule> parts;
      for (auto i : c) parts.push_back(base[i]);
      detail::push_if_new(u.modules, direct_sum(std::span<const FiniteModule>(parts), caps).module);
    }
  }
  for (const auto& m : base)
    if (is_simple_module(m)) detail::push_if_new(u.simples, m);
  return u;
}

} // namespace modlab
