#pragma once

#include <optional>
#include <vector>

#include "modlab/lattice.hpp"

namespace modlab {

struct StructuralPredicates {
  bool is_simple = false;
  bool is_semisimple = false;
  bool is_homogeneous_semisimple = false;
  Submodule socle;
  Submodule jacobson_radical;
};

/// Sum of the simple submodules.
inline Submodule socle(const FiniteModule& M) {
  auto L = enumerate_submodules(M);
  ElementSet s(M.order(), {M.zero()});
  for (auto a : L.atoms()) s = sum_carriers(M, s, L.carrier(a));
  return {M, s};
}

/// Intersection of the maximal submodules; 0 for the zero module.
inline Submodule jacobson_radical(const FiniteModule& M) {
  if (M.is_zero_module()) return zero_submodule(M);
  auto L = enumerate_submodules(M);
  ElementSet r = ElementSet::full(M.order());
  for (auto c : L.coatoms()) r &= L.carrier(c);
  return {M, r};
}

inline bool is_simple_module(const FiniteModule& M) { return enumerate_submodules(M).size() == 2; }

inline StructuralPredicates structural_predicates(const FiniteModule& M) {
  StructuralPredicates p;
  auto L = enumerate_submodules(M);
  p.is_simple = L.size() == 2;
  p.socle = socle(M);
  p.jacobson_radical = jacobson_radical(M);
  p.is_semisimple = p.socle.is_whole();
  if (p.is_semisimple) {
    auto atoms = L.atoms();
    p.is_homogeneous_semisimple = true;
    if (!atoms.empty()) {
      auto first = as_module(L[atoms[0]]).module;
      for (std::size_t i = 1; i < atoms.size() && p.is_homogeneous_semisimple; ++i)
        p.is_homogeneous_semisimple = are_isomorphic(first, as_module(L[atoms[i]]).module);
    }
  }
  return p;
}

struct LatticePredicates {
  bool is_essential = false;
  bool is_superfluous = false;
  bool is_atom = false;
};

inline LatticePredicates lattice_predicates(const Submodule& N) {
  const FiniteModule& M = N.parent();
  auto L = enumerate_submodules(M);
  LatticePredicates p;
  p.is_essential = true;
  p.is_superfluous = true;
  p.is_atom = !N.is_zero();
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto& K = L.carrier(i);
    if (K.size() > 1 && (K & N.carrier()).size() == 1) p.is_essential = false;
    if (!K.is_full() && sum_carriers(M, N.carrier(), K).is_full()) p.is_superfluous = false;
    if (K.size() > 1 && K != N.carrier() && K.subset_of(N.carrier())) p.is_atom = false;
  }
  return p;
}

/// Witness that M fails Baer's criterion: a left ideal and a map from it into
/// M that does not extend to R.
struct BaerWitness {
  Ideal left_ideal;
  ModuleMorphism map;
};

/// Baer's criterion, brute force: every map I -> M from a left ideal I must be
/// the restriction of some map R -> M.
inline std::optional<BaerWitness> baer_failure(const FiniteModule& M) {
  const FiniteRing& R = M.ring();
  auto RR = regular_module(R);
  auto from_ring = hom_set(RR, M);
  for (const auto& I : enumerate_ideals(R, Sidedness::left)) {
    auto emb = as_module(Submodule(RR, I.carrier()));
    for (const auto& g : hom_set(emb.module, M)) {
      bool extends = false;
      for (const auto& h : from_ring) {
        bool agrees = true;
        for (Elem i = 0; i < emb.inclusion.size() && agrees; ++i) agrees = h(emb.inclusion[i]) == g(i);
        if (agrees) {
          extends = true;
          break;
        }
      }
      if (!extends) return BaerWitness{I, g};
    }
  }
  return std::nullopt;
}

inline bool is_injective(const FiniteModule& M) { return !baer_failure(M).has_value(); }

} // namespace modlab
