#pragma once

// Deciders for first-type properties of finite modules.
//
// Each decider that has two or more equivalent characterizations computes all
// of them from separate code paths and throws InternalInconsistency when they
// disagree. Negative verdicts carry the first witness met in canonical scan
// order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlab/cogeneration.hpp"
#include "modlab/preradical_props.hpp"

namespace modlab {

namespace detail {
inline void require_nonzero(const FiniteModule& M, const char* what) {
  if (M.is_zero_module()) throw InvalidArgument(std::string(what) + " is defined for nonzero modules only");
}
} // namespace detail

// ---------------------------------------------------------------------------
// BJKN-prime

struct BjknResult {
  bool value = false;
  bool every_submodule_cogenerates = false;
  bool every_cyclic_cogenerates = false;
  bool element_pairs = false;
  bool products_nonzero = false;
  /// First nonzero submodule that does not cogenerate M.
  std::optional<Submodule> non_cogenerating;
  /// (x, y) with every f: M -> Ry killing x.
  std::optional<std::pair<Elem, Elem>> element_witness;
  /// (A, B) with A * B = 0.
  std::optional<std::pair<Submodule, Submodule>> product_witness;
};

/// Every nonzero submodule cogenerates M, checked four ways: over all nonzero
/// submodules, over the cyclic ones, elementwise (for x, y != 0 some
/// f: M -> Ry has f(x) != 0) and through the product A * B.
inline BjknResult bjkn_prime(const FiniteModule& M) {
  detail::require_nonzero(M, "BJKN-primeness");
  BjknResult r;
  auto L = enumerate_submodules(M);

  r.every_submodule_cogenerates = true;
  for (std::size_t i = 1; i < L.size(); ++i)
    if (!cogenerates(L[i], M)) {
      r.every_submodule_cogenerates = false;
      r.non_cogenerating = L[i];
      break;
    }

  r.every_cyclic_cogenerates = true;
  for (Elem y = 0; y < M.order() && r.every_cyclic_cogenerates; ++y)
    if (y != M.zero()) r.every_cyclic_cogenerates = cogenerates(cyclic_submodule(M, y), M);

  // For each cyclic Ry: the elements some map M -> Ry does not kill.
  std::map<ElementSet, ElementSet, CanonicalLess> separated;
  auto reached = [&](Elem y) -> const ElementSet& {
    auto c = cyclic_submodule(M, y);
    auto it = separated.find(c.carrier());
    if (it != separated.end()) return it->second;
    auto emb = as_module(c);
    ElementSet s(M.order());
    for (const auto& f : hom_set(M, emb.module))
      for (Elem x = 0; x < M.order(); ++x)
        if (f(x) != emb.module.zero()) s.insert(x);
    return separated.emplace(c.carrier(), std::move(s)).first->second;
  };
  r.element_pairs = true;
  for (Elem x = 0; x < M.order() && r.element_pairs; ++x) {
    if (x == M.zero()) continue;
    for (Elem y = 0; y < M.order(); ++y)
      if (y != M.zero() && !reached(y).contains(x)) {
        r.element_pairs = false;
        r.element_witness = std::pair{x, y};
        break;
      }
  }

  // A * B != 0 iff some f: M -> B is nonzero on A; stop at the first such f.
  auto product_nonzero = [&](const Submodule& A, const Submodule& B) {
    auto emb = as_module(B);
    for (const auto& f : hom_set(M, emb.module)) {
      bool hit = false;
      A.carrier().for_each([&](Elem a) { hit = hit || f(a) != emb.module.zero(); });
      if (hit) return true;
    }
    return false;
  };
  r.products_nonzero = true;
  for (std::size_t a = 1; a < L.size() && r.products_nonzero; ++a)
    for (std::size_t b = 1; b < L.size(); ++b)
      if (!product_nonzero(L[a], L[b])) {
        r.products_nonzero = false;
        r.product_witness = std::pair{L[a], L[b]};
        break;
      }

  r.value = r.every_submodule_cogenerates;
  if (r.every_cyclic_cogenerates != r.value || r.element_pairs != r.value || r.products_nonzero != r.value)
    throw InternalInconsistency("BJKN-prime characterizations disagree on " + M.description());
  return r;
}

inline bool is_bjkn_prime(const FiniteModule& M) { return bjkn_prime(M).value; }

// ---------------------------------------------------------------------------
// Prime (t-radical first)

struct PrimeResult {
  bool value = false;
  bool by_annihilators = false;
  bool by_ideal_action = false;
  /// Nonzero N with Ann(N) != Ann(M).
  std::optional<Submodule> annihilator_witness;
  /// Two-sided I and nonzero N with I N = 0 but I M != 0.
  std::optional<std::pair<Ideal, Submodule>> ideal_witness;
};

inline PrimeResult prime_module(const FiniteModule& M) {
  detail::require_nonzero(M, "primeness");
  PrimeResult r;
  auto L = enumerate_submodules(M);
  const auto whole = ElementSet::full(M.order());
  const auto annM = annihilator(M, whole);

  r.by_annihilators = true;
  for (std::size_t i = 1; i < L.size(); ++i)
    if (annihilator(M, L.carrier(i)) != annM) {
      r.by_annihilators = false;
      r.annihilator_witness = L[i];
      break;
    }

  r.by_ideal_action = true;
  for (const auto& I : enumerate_ideals(M.ring(), Sidedness::two_sided)) {
    if (ideal_times(M, I.carrier(), whole).size() == 1) continue;
    for (std::size_t i = 1; i < L.size(); ++i)
      if (ideal_times(M, I.carrier(), L.carrier(i)).size() == 1) {
        r.by_ideal_action = false;
        r.ideal_witness = std::pair{I, L[i]};
        break;
      }
    if (!r.by_ideal_action) break;
  }

  r.value = r.by_annihilators;
  if (r.by_ideal_action != r.value) throw InternalInconsistency("primeness routes disagree on " + M.description());
  return r;
}

inline bool is_prime_module(const FiniteModule& M) { return prime_module(M).value; }

// ---------------------------------------------------------------------------
// R-pid-first

struct RpidResult {
  bool value = false;
  bool pairwise = false;
  bool family = false;
  /// Nonzero (N, K) with Hom(N, K) = 0.
  std::optional<std::pair<Submodule, Submodule>> witness;
};

/// Idempotent preradicals used as a sanity check: the traces tr_N of the
/// nonzero submodules N, soc, and tr_N v soc.
inline std::vector<Preradical> idempotent_test_family(const FiniteModule& M) {
  auto L = enumerate_submodules(M);
  std::vector<Preradical> out{Preradical::soc()};
  for (std::size_t i = 1; i < L.size(); ++i) {
    auto tr = Preradical::trace(as_module(L[i]).module);
    out.push_back(tr);
    out.push_back(Preradical::join({tr, Preradical::soc()}));
  }
  return out;
}

inline bool is_A_first(const FiniteModule& M, const std::vector<Preradical>& family);

/// Nonzero Hom(N, K) for all nonzero submodules N, K, cross-checked against
/// firstness for the idempotent test family.
inline RpidResult rpid_first(const FiniteModule& M) {
  detail::require_nonzero(M, "R-pid-firstness");
  RpidResult r;
  auto L = enumerate_submodules(M);
  r.pairwise = true;
  for (std::size_t n = 1; n < L.size() && r.pairwise; ++n)
    for (std::size_t k = 1; k < L.size(); ++k)
      if (!has_nonzero_morphism(as_module(L[n]).module, as_module(L[k]).module)) {
        r.pairwise = false;
        r.witness = std::pair{L[n], L[k]};
        break;
      }
  r.family = is_A_first(M, idempotent_test_family(M));
  r.value = r.pairwise;
  if (r.family != r.value) throw InternalInconsistency("R-pid-first routes disagree on " + M.description());
  return r;
}

inline bool is_rpid_first(const FiniteModule& M) { return rpid_first(M).value; }

// ---------------------------------------------------------------------------
// Retractability and the endomorphism ring

/// Every nonzero submodule N admits a nonzero map M -> N.
inline std::optional<Submodule> retractability_witness(const FiniteModule& M) {
  auto L = enumerate_submodules(M);
  for (std::size_t i = 1; i < L.size(); ++i)
    if (!has_nonzero_morphism(M, as_module(L[i]).module)) return L[i];
  return std::nullopt;
}

inline bool is_retractable(const FiniteModule& M) { return !retractability_witness(M).has_value(); }

struct EndomorphismRing {
  std::vector<ModuleMorphism> maps;
  /// Element i is maps[i]; multiplication is composition (ab)(x) = a(b(x)).
  FiniteRing ring;
};

/// Largest endomorphism ring materialized as a ring table.
inline constexpr std::size_t endomorphism_table_limit = 64;

inline EndomorphismRing endomorphism_ring(const FiniteModule& M) {
  detail::require_nonzero(M, "the endomorphism ring");
  auto ends = endomorphisms(M);
  const std::size_t n = ends.size();
  check_cap(n, endomorphism_table_limit, "endomorphism ring order");
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(ends[i].table(), static_cast<Elem>(i));
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> t(M.order());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (Elem x = 0; x < M.order(); ++x) t[x] = M.add(ends[a](x), ends[b](x));
      add[a * n + b] = index.at(t);
      for (Elem x = 0; x < M.order(); ++x) t[x] = ends[a](ends[b](x));
      mul[a * n + b] = index.at(t);
    }
  Caps caps;
  caps.ring_order = n;
  auto R = make_raw_ring(std::move(add), std::move(mul), caps, RingKind::raw, "End(" + M.description() + ")");
  return {std::move(ends), std::move(R)};
}

/// I J != 0 for all nonzero two-sided ideals I, J.
inline bool is_prime_ring(const FiniteRing& R) {
  auto ideals = enumerate_ideals(R, Sidedness::two_sided);
  for (std::size_t i = 1; i < ideals.size(); ++i)
    for (std::size_t j = 1; j < ideals.size(); ++j)
      if (ideal_product(R, ideals[i].carrier(), ideals[j].carrier()).size() == 1) return false;
  return true;
}

/// End(M) is prime: a End(M) b != 0 for all nonzero a, b. Since
/// a End(M) b = 0 exactly when a kills the End(M)-closure of b(M), only one
/// closure per image is needed. When End(M) is small enough to tabulate, the
/// ideal-product definition is evaluated too and must agree.
inline bool is_prime_endomorphism_ring(const FiniteModule& M) {
  detail::require_nonzero(M, "the endomorphism ring");
  auto ends = endomorphisms(M);
  const auto whole = ElementSet::full(M.order());
  std::map<ElementSet, bool, CanonicalLess> verdict_by_image;
  bool prime = true;
  for (const auto& b : ends) {
    if (b.is_zero()) continue;
    auto img = b.image(whole);
    if (verdict_by_image.count(img)) continue;
    ElementSet closure(M.order(), {M.zero()});
    for (const auto& r : ends) closure = sum_carriers(M, closure, r.image(img));
    bool ok = true;
    for (const auto& a : ends)
      if (!a.is_zero() && a.image(closure).size() == 1) ok = false;
    verdict_by_image.emplace(img, ok);
    prime = prime && ok;
  }
  if (ends.size() <= endomorphism_table_limit) {
    if (is_prime_ring(endomorphism_ring(M).ring) != prime)
      throw InternalInconsistency("endomorphism ring primeness routes disagree on " + M.description());
  }
  return prime;
}

// ---------------------------------------------------------------------------
// Families

/// (family index, K) with sigma(K) = 0 for a nonzero K <= M but sigma(M) != 0.
struct FamilyWitness {
  std::size_t member;
  Submodule submodule;
};

inline std::optional<FamilyWitness> A_first_witness(const FiniteModule& M, const std::vector<Preradical>& family) {
  detail::require_nonzero(M, "A-firstness");
  auto L = enumerate_submodules(M);
  for (std::size_t s = 0; s < family.size(); ++s) {
    if (family[s].evaluate(M).is_zero()) continue;
    for (std::size_t i = 1; i < L.size(); ++i)
      if (evaluate_on(family[s], L[i]).is_zero()) return FamilyWitness{s, L[i]};
  }
  return std::nullopt;
}

inline bool is_A_first(const FiniteModule& M, const std::vector<Preradical>& family) {
  return !A_first_witness(M, family).has_value();
}

/// (family index, K) with sigma(K) = 0 for a nonzero K <= M. The zero module
/// has no such K and is fully first for every family.
inline std::optional<FamilyWitness> A_fully_first_witness(const FiniteModule& M,
                                                          const std::vector<Preradical>& family) {
  auto L = enumerate_submodules(M);
  for (std::size_t s = 0; s < family.size(); ++s)
    for (std::size_t i = 1; i < L.size(); ++i)
      if (evaluate_on(family[s], L[i]).is_zero()) return FamilyWitness{s, L[i]};
  return std::nullopt;
}

inline bool is_A_fully_first(const FiniteModule& M, const std::vector<Preradical>& family) {
  return !A_fully_first_witness(M, family).has_value();
}

// ---------------------------------------------------------------------------
// Diuniformity

/// First nonzero fully invariant submodule that is not essential.
inline std::optional<Submodule> diuniformity_witness(const FiniteModule& M) {
  detail::require_nonzero(M, "diuniformity");
  auto L = enumerate_submodules(M);
  for (auto i : L.fully_invariant_indices())
    if (i != 0 && !lattice_predicates(L[i]).is_essential) return L[i];
  return std::nullopt;
}

inline bool is_diuniform(const FiniteModule& M) { return !diuniformity_witness(M).has_value(); }

// ---------------------------------------------------------------------------
// Classes T, F, P (first or zero) and script-P (fully first)

struct ClassMembership {
  bool in_T = false;
  bool in_F = false;
  bool in_P = false;
  bool in_script_P = false;
  bool operator==(const ClassMembership&) const = default;
};

inline ClassMembership class_membership_unchecked(const FiniteModule& M, const std::vector<Preradical>& family) {
  ClassMembership c;
  c.in_T = c.in_F = true;
  for (const auto& s : family) {
    auto v = s.evaluate(M);
    c.in_T = c.in_T && v.is_whole();
    c.in_F = c.in_F && v.is_zero();
  }
  c.in_P = M.is_zero_module() || is_A_first(M, family);
  c.in_script_P = is_A_fully_first(M, family);
  return c;
}

/// Violations of the class identities for M and a family: intersections over
/// members, P_s = script-P_s u F_s, script-P and F inside P, monotonicity of
/// script-P_s in s (order taken over the submodules of M) and antitonicity of
/// the classes in the family (checked on single-member and leave-one-out
/// subfamilies).
inline std::vector<std::string> class_identity_violations(const FiniteModule& M,
                                                          const std::vector<Preradical>& family) {
  std::vector<std::string> out;
  const auto whole = class_membership_unchecked(M, family);
  std::vector<ClassMembership> single;
  for (const auto& s : family) single.push_back(class_membership_unchecked(M, {s}));

  bool all_sp = true, all_p = true;
  for (std::size_t i = 0; i < single.size(); ++i) {
    all_sp = all_sp && single[i].in_script_P;
    all_p = all_p && single[i].in_P;
    if (single[i].in_P != (single[i].in_script_P || single[i].in_F))
      out.push_back("P = script-P u F fails for " + family[i].describe());
    if (single[i].in_script_P && !single[i].in_P) out.push_back("script-P not inside P for " + family[i].describe());
    if (single[i].in_F && !single[i].in_P) out.push_back("F not inside P for " + family[i].describe());
  }
  if (whole.in_script_P != all_sp) out.push_back("script-P of the family is not the intersection");
  if (whole.in_P != all_p) out.push_back("P of the family is not the intersection");
  if (whole.in_script_P && !whole.in_P) out.push_back("script-P not inside P for the family");
  if (whole.in_F && !whole.in_P) out.push_back("F not inside P for the family");

  auto L = enumerate_submodules(M);
  std::vector<FiniteModule> subs;
  for (std::size_t i = 0; i < L.size(); ++i) subs.push_back(as_module(L[i]).module);
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      auto o = compare(family[a], family[b], std::span<const FiniteModule>(subs));
      if ((o == PreradicalOrder::less || o == PreradicalOrder::equal) && single[a].in_script_P &&
          !single[b].in_script_P)
        out.push_back("script-P not monotone: " + family[a].describe() + " <= " + family[b].describe());
    }
  if (family.size() > 1)
    for (std::size_t skip = 0; skip < family.size(); ++skip) {
      std::vector<Preradical> sub;
      for (std::size_t i = 0; i < family.size(); ++i)
        if (i != skip) sub.push_back(family[i]);
      auto c = class_membership_unchecked(M, sub);
      if (whole.in_script_P && !c.in_script_P) out.push_back("script-P not antitone in the family");
      if (whole.in_P && !c.in_P) out.push_back("P not antitone in the family");
    }
  return out;
}

/// Memberships with every class identity asserted.
inline ClassMembership class_membership(const FiniteModule& M, const std::vector<Preradical>& family) {
  auto v = class_identity_violations(M, family);
  if (!v.empty()) throw InternalInconsistency("class identities fail on " + M.description() + ": " + v.front());
  return class_membership_unchecked(M, family);
}

// ---------------------------------------------------------------------------
// Report

struct FirstnessReport {
  std::string module;
  /// Verdicts and witnesses keyed by notion name, in a fixed order.
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, std::string>> witnesses;

  bool verdict(const std::string& name) const {
    for (const auto& [k, v] : verdicts)
      if (k == name) return v;
    throw InvalidArgument("no verdict named " + name);
  }
};

inline std::string describe_pair(const Submodule& a, const Submodule& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

inline FirstnessReport firstness_report(const FiniteModule& M) {
  FirstnessReport r;
  r.module = M.description();
  auto bj = bjkn_prime(M);
  r.verdicts.emplace_back("bjkn_prime", bj.value);
  if (!bj.value) {
    r.witnesses.emplace_back("bjkn_prime.submodule", bj.non_cogenerating->to_string() + " does not cogenerate");
    r.witnesses.emplace_back("bjkn_prime.elements", "x=" + std::to_string(bj.element_witness->first) +
                                                        " y=" + std::to_string(bj.element_witness->second));
    r.witnesses.emplace_back("bjkn_prime.product",
                             describe_pair(bj.product_witness->first, bj.product_witness->second) + " product is 0");
  }
  auto pr = prime_module(M);
  r.verdicts.emplace_back("prime", pr.value);
  if (!pr.value)
    r.witnesses.emplace_back("prime", "I=" + pr.ideal_witness->first.carrier().to_string() +
                                          " N=" + pr.ideal_witness->second.to_string());
  auto rp = rpid_first(M);
  r.verdicts.emplace_back("rpid_first", rp.value);
  if (!rp.value)
    r.witnesses.emplace_back("rpid_first", describe_pair(rp.witness->first, rp.witness->second) + " Hom = 0");
  auto dw = diuniformity_witness(M);
  r.verdicts.emplace_back("diuniform", !dw);
  if (dw) r.witnesses.emplace_back("diuniform", dw->to_string() + " fully invariant, not essential");
  auto rw = retractability_witness(M);
  r.verdicts.emplace_back("retractable", !rw);
  if (rw) r.witnesses.emplace_back("retractable", "Hom(M, " + rw->to_string() + ") = 0");
  r.verdicts.emplace_back("prime_endomorphism_ring", is_prime_endomorphism_ring(M));
  return r;
}

} // namespace modlab
