#pragma once

#include <optional>
#include <set>
#include <vector>

#include "modlab/preradical.hpp"

namespace modlab {

/// Reject of N in M: intersection of the kernels of all maps M -> N.
inline Submodule reject(const FiniteModule& N, const FiniteModule& M) { return Preradical::reject(N).evaluate(M); }

/// Components of a monomorphism M -> N^k: one map per nonzero element of M that
/// it does not kill, so k <= |M| - 1. Empty optional when some nonzero element
/// is killed by every map M -> N.
inline std::optional<std::vector<ModuleMorphism>> embedding_into_power(const FiniteModule& N, const FiniteModule& M) {
  auto homs = hom_set(M, N);
  std::vector<ModuleMorphism> chosen;
  std::vector<bool> separated(M.order(), false);
  for (Elem m = 0; m < M.order(); ++m) {
    if (m == M.zero() || separated[m]) continue;
    auto it = std::find_if(homs.begin(), homs.end(), [&](const ModuleMorphism& f) { return f(m) != N.zero(); });
    if (it == homs.end()) return std::nullopt;
    for (Elem x = 0; x < M.order(); ++x)
      if ((*it)(x) != N.zero()) separated[x] = true;
    chosen.push_back(*it);
  }
  // The tuple map x -> (f_1(x), ..., f_k(x)) must be injective.
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < M.order(); ++x) {
    std::vector<Elem> t;
    for (const auto& f : chosen) t.push_back(f(x));
    if (!seen.insert(t).second) throw InternalInconsistency("separating family is not injective");
  }
  return chosen;
}

/// N cogenerates M iff the reject of N in M is zero, iff M embeds in a finite
/// power of N. Both are computed and must agree.
inline bool cogenerates(const FiniteModule& N, const FiniteModule& M) {
  require_same_ring(N.ring(), M.ring());
  const bool by_reject = reject(N, M).is_zero();
  const bool by_embedding = embedding_into_power(N, M).has_value();
  if (by_reject != by_embedding)
    throw InternalInconsistency("cogeneration routes disagree for " + N.description() + " -> " + M.description());
  return by_reject;
}

inline bool cogenerates(const Submodule& N, const FiniteModule& M) { return cogenerates(as_module(N).module, M); }

} // namespace modlab
