#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <vector>

#include "modlab/module.hpp"

namespace modlab {

/// An R-linear map given by its full element table.
class ModuleMorphism {
public:
  ModuleMorphism() = default;
  ModuleMorphism(FiniteModule source, FiniteModule target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  const FiniteModule& source() const { return source_; }
  const FiniteModule& target() const { return target_; }
  const std::vector<Elem>& table() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool is_zero() const {
    return std::all_of(map_.begin(), map_.end(), [&](Elem y) { return y == target_.zero(); });
  }
  bool is_injective() const {
    std::vector<bool> hit(target_.order(), false);
    for (Elem y : map_) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }
  bool is_surjective() const {
    std::vector<bool> hit(target_.order(), false);
    for (Elem y : map_) hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }
  bool is_bijective() const { return source_.order() == target_.order() && is_injective(); }

  ElementSet image(const ElementSet& s) const {
    ElementSet out(target_.order());
    s.for_each([&](Elem x) { out.insert(map_[x]); });
    return out;
  }
  ElementSet preimage(const ElementSet& s) const {
    ElementSet out(source_.order());
    for (Elem x = 0; x < source_.order(); ++x)
      if (s.contains(map_[x])) out.insert(x);
    return out;
  }
  ElementSet kernel() const { return preimage(ElementSet(target_.order(), {target_.zero()})); }

  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

private:
  FiniteModule source_;
  FiniteModule target_;
  std::vector<Elem> map_;
};

/// g after f.
inline ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  std::vector<Elem> t(f.source().order());
  for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return {f.source(), g.target(), std::move(t)};
}

/// Full additivity and linearity check of an arbitrary table.
inline bool is_linear_map(const FiniteModule& M, const FiniteModule& N, const std::vector<Elem>& f) {
  if (f.size() != M.order()) return false;
  for (Elem x = 0; x < M.order(); ++x) {
    if (f[x] >= N.order()) return false;
    for (Elem y = x; y < M.order(); ++y)
      if (f[M.add(x, y)] != N.add(f[x], f[y])) return false;
    for (Elem r = 0; r < M.ring().order(); ++r)
      if (f[M.act(r, x)] != N.act(r, f[x])) return false;
  }
  return true;
}

/// Greedy generating set of M (by element index) together with the order in
/// which the span grows, so a map is determined by generator images.
struct GenerationPlan {
  std::vector<Elem> generators;
  /// span_before[k]: elements reachable from generators[0..k) in discovery order.
  std::vector<std::vector<Elem>> span_before;
  /// layer_of[x]: index of the generator whose addition first reached x
  /// (zero has no layer and maps to generators.size()).
  std::vector<std::size_t> layer_of;
};

inline GenerationPlan generation_plan(const FiniteModule& M) {
  GenerationPlan plan;
  const std::size_t n = M.order();
  plan.layer_of.assign(n, std::size_t(-1));
  std::vector<Elem> span{M.zero()};
  std::vector<bool> in_span(n, false);
  in_span[M.zero()] = true;
  for (Elem x = 0; x < n; ++x) {
    if (in_span[x]) continue;
    const std::size_t k = plan.generators.size();
    plan.generators.push_back(x);
    plan.span_before.push_back(span);
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i)
      for (Elem r = 0; r < M.ring().order(); ++r) {
        Elem e = M.add(span[i], M.act(r, x));
        if (!in_span[e]) {
          in_span[e] = true;
          plan.layer_of[e] = k;
          span.push_back(e);
        }
      }
  }
  plan.layer_of[M.zero()] = plan.generators.size();
  return plan;
}

/// Calls `visit(table)` for every R-linear map M -> N; stop early by returning
/// false. Maps are produced by backtracking over generator images: adding
/// generator g with image y defines f(s + r g) = f(s) + r y on the enlarged
/// span, and any clash between two representations of the same element prunes
/// the branch. Surviving leaves are re-verified on the full carrier.
inline void for_each_morphism_table(const FiniteModule& M, const FiniteModule& N,
                                    const std::function<bool(const std::vector<Elem>&)>& visit) {
  require_same_ring(M.ring(), N.ring());
  const FiniteRing& R = M.ring();
  const auto plan = generation_plan(M);
  const std::size_t gens = plan.generators.size();
  const Elem unset = static_cast<Elem>(N.order());
  std::vector<Elem> f(M.order(), unset);
  f[M.zero()] = N.zero();

  // Candidate images must be killed by everything killing the generator.
  std::vector<std::vector<Elem>> candidates(gens);
  for (std::size_t k = 0; k < gens; ++k) {
    auto ann = annihilator(M, ElementSet(M.order(), {plan.generators[k]}));
    for (Elem y = 0; y < N.order(); ++y) {
      bool ok = true;
      ann.for_each([&](Elem r) { ok = ok && N.act(r, y) == N.zero(); });
      if (ok) candidates[k].push_back(y);
    }
  }

  bool keep_going = true;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (!keep_going) return;
    if (k == gens) {
      if (!is_linear_map(M, N, f)) throw InternalInconsistency("hom enumeration produced a non-linear map");
      keep_going = visit(f);
      return;
    }
    const Elem g = plan.generators[k];
    const auto& span = plan.span_before[k];
    for (Elem y : candidates[k]) {
      bool consistent = true;
      for (std::size_t i = 0; i < span.size() && consistent; ++i)
        for (Elem r = 0; r < R.order(); ++r) {
          Elem e = M.add(span[i], M.act(r, g));
          Elem v = N.add(f[span[i]], N.act(r, y));
          if (f[e] == unset) {
            f[e] = v;
          } else if (f[e] != v) {
            consistent = false;
            break;
          }
        }
      if (consistent) extend(k + 1);
      for (Elem x = 0; x < M.order(); ++x)
        if (plan.layer_of[x] == k) f[x] = unset;
      if (!keep_going) return;
    }
  };
  extend(0);
}

/// All R-linear maps M -> N in lexicographic order of their tables. Results
/// are memoized on M's data block keyed by N's identity.
inline std::vector<ModuleMorphism> hom_set(const FiniteModule& M, const FiniteModule& N, const Caps& caps = {}) {
  require_same_ring(M.ring(), N.ring());
  std::shared_ptr<const detail::MapTables> tables;
  const auto& md = M.data();
  {
    std::lock_guard lock(md.cache_mutex);
    if (auto it = md.homs.find(N.id()); it != md.homs.end() && !it->second.target.expired())
      tables = it->second.maps;
  }
  if (!tables) {
    auto fresh = std::make_shared<detail::MapTables>();
    for_each_morphism_table(M, N, [&](const std::vector<Elem>& t) {
      fresh->push_back(t);
      if (fresh->size() > caps.hom_count)
        throw CapExceeded("hom-set size exceeds cap " + std::to_string(caps.hom_count));
      return true;
    });
    std::sort(fresh->begin(), fresh->end());
    fresh->erase(std::unique(fresh->begin(), fresh->end()), fresh->end());
    tables = fresh;
    std::lock_guard lock(md.cache_mutex);
    for (auto it = md.homs.begin(); it != md.homs.end();)
      it = it->second.target.expired() ? md.homs.erase(it) : std::next(it);
    md.homs[N.id()] = detail::HomCacheEntry{N.shared(), tables};
  }
  std::vector<ModuleMorphism> out;
  out.reserve(tables->size());
  for (const auto& t : *tables) out.emplace_back(M, N, t);
  return out;
}

inline std::vector<ModuleMorphism> endomorphisms(const FiniteModule& M) { return hom_set(M, M); }

/// First morphism satisfying `pred`, without materializing the hom-set.
inline std::optional<ModuleMorphism> find_morphism(const FiniteModule& M, const FiniteModule& N,
                                                   const std::function<bool(const ModuleMorphism&)>& pred) {
  std::optional<ModuleMorphism> found;
  for_each_morphism_table(M, N, [&](const std::vector<Elem>& t) {
    ModuleMorphism f(M, N, t);
    if (pred(f)) {
      found = std::move(f);
      return false;
    }
    return true;
  });
  return found;
}

inline bool has_nonzero_morphism(const FiniteModule& M, const FiniteModule& N) {
  return find_morphism(M, N, [](const ModuleMorphism& f) { return !f.is_zero(); }).has_value();
}

/// Isomorphism by exhaustive search for a bijective morphism, after a cheap
/// invariant screen (order and the multiset of element annihilators).
inline std::optional<ModuleMorphism> find_isomorphism(const FiniteModule& A, const FiniteModule& B) {
  if (!same_ring(A.ring(), B.ring()) || A.order() != B.order()) return std::nullopt;
  auto profile = [](const FiniteModule& M) {
    std::vector<ElementSet> anns;
    for (Elem x = 0; x < M.order(); ++x) anns.push_back(annihilator(M, ElementSet(M.order(), {x})));
    std::sort(anns.begin(), anns.end(), CanonicalLess{});
    return anns;
  };
  if (profile(A) != profile(B)) return std::nullopt;
  return find_morphism(A, B, [](const ModuleMorphism& f) { return f.is_bijective(); });
}

inline bool are_isomorphic(const FiniteModule& A, const FiniteModule& B) { return find_isomorphism(A, B).has_value(); }

} // namespace modlab
