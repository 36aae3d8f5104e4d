#pragma once

// Ring-level classification and the theorem-replay harness.
//
// Everything quantified over "all modules" is evaluated over a generated
// Universe, so verdicts hold at universe scale only.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlab/firstness.hpp"

namespace modlab {

struct RingClassification {
  bool is_simple = false;
  bool is_semisimple = false;
  bool is_homogeneous_semisimple = false;
  bool is_left_local = false;
  bool is_left_semiartinian_on_universe = false;
  bool is_V_ring = false;
  bool is_BKN_on_universe = false;
  /// (flag, description) for each flag that is false.
  std::vector<std::pair<std::string, std::string>> witnesses;
  /// Simple module failing Baer's criterion, when the ring is not a V-ring.
  std::optional<FiniteModule> non_injective_simple;
  std::optional<BaerWitness> baer_witness;

  std::vector<std::pair<std::string, bool>> flags() const {
    return {{"simple", is_simple},
            {"semisimple", is_semisimple},
            {"homogeneous_semisimple", is_homogeneous_semisimple},
            {"left_local", is_left_local},
            {"left_semiartinian_on_universe", is_left_semiartinian_on_universe},
            {"V_ring", is_V_ring},
            {"BKN_on_universe", is_BKN_on_universe}};
  }
};

inline std::string describe_map(const ModuleMorphism& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.table().size(); ++i) s += (i ? " " : "") + std::to_string(f.table()[i]);
  return s + "]";
}

inline std::optional<std::pair<FiniteModule, FiniteModule>> bkn_failure(const Universe& u) {
  for (const auto& M : u.modules)
    for (const auto& N : u.modules)
      if (!M.is_zero_module() && !N.is_zero_module() && !has_nonzero_morphism(M, N)) return std::pair{M, N};
  return std::nullopt;
}

inline RingClassification classify_ring(const FiniteRing& R, const Universe& u) {
  require_same_ring(R, u.ring);
  RingClassification c;
  auto ideals = enumerate_ideals(R, Sidedness::two_sided);
  c.is_simple = ideals.size() == 2;
  if (!c.is_simple) c.witnesses.emplace_back("simple", "two-sided ideal " + ideals[1].carrier().to_string());

  auto RR = regular_module(R);
  auto sp = structural_predicates(RR);
  c.is_semisimple = sp.is_semisimple;
  c.is_homogeneous_semisimple = sp.is_homogeneous_semisimple;
  if (!c.is_semisimple) c.witnesses.emplace_back("semisimple", "soc(R) = " + sp.socle.to_string());
  else if (!c.is_homogeneous_semisimple)
    c.witnesses.emplace_back("homogeneous_semisimple", "non-isomorphic simple summands in R");
  if (!c.is_semisimple) c.witnesses.emplace_back("homogeneous_semisimple", "R is not semisimple");

  c.is_left_local = u.simples.size() == 1;
  if (!c.is_left_local && u.simples.size() > 1)
    c.witnesses.emplace_back("left_local", u.simples[0].description() + " not isomorphic to " +
                                               u.simples[1].description());

  c.is_left_semiartinian_on_universe = true;
  for (const auto& M : u.modules)
    if (!M.is_zero_module() && socle(M).is_zero()) {
      c.is_left_semiartinian_on_universe = false;
      c.witnesses.emplace_back("left_semiartinian_on_universe", M.description() + " has zero socle");
      break;
    }

  c.is_V_ring = true;
  for (const auto& S : u.simples)
    if (auto w = baer_failure(S)) {
      c.is_V_ring = false;
      c.non_injective_simple = S;
      c.baer_witness = w;
      c.witnesses.emplace_back("V_ring", S.description() + " fails Baer on left ideal " +
                                             w->left_ideal.carrier().to_string() + " with map " +
                                             describe_map(w->map));
      break;
    }

  auto bkn = bkn_failure(u);
  c.is_BKN_on_universe = !bkn;
  if (bkn) c.witnesses.emplace_back("BKN_on_universe", "Hom(" + bkn->first.description() + ", " +
                                                           bkn->second.description() + ") = 0");
  return c;
}

/// Every linear filter of left ideals as a left exact preradical: families
/// containing R that are upward closed, closed under intersection and under
/// (I : a) = {r | r a in I}.
inline std::vector<Preradical> enumerate_lep(const FiniteRing& R, const Caps& caps = {}) {
  auto ideals = enumerate_ideals(R, Sidedness::left);
  const std::size_t n = ideals.size();
  check_cap(n, caps.filter_left_ideals, "left ideal count for filter enumeration");
  std::map<ElementSet, std::size_t, CanonicalLess> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(ideals[i].carrier(), i);
  // colon[i][a] = index of (I_i : a)
  std::vector<std::vector<std::size_t>> colon(n, std::vector<std::size_t>(R.order()));
  for (std::size_t i = 0; i < n; ++i)
    for (Elem a = 0; a < R.order(); ++a) {
      ElementSet c(R.order());
      for (Elem r = 0; r < R.order(); ++r)
        if (ideals[i].contains(R.mul(r, a))) c.insert(r);
      colon[i][a] = index.at(c);
    }
  std::vector<Preradical> out;
  const std::size_t top = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1; };
    if (!in(top)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!in(i)) continue;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (ideals[i].carrier().subset_of(ideals[j].carrier()) && !in(j)) ok = false;
        if (in(j) && !in(index.at(ideals[i].carrier() & ideals[j].carrier()))) ok = false;
      }
      for (Elem a = 0; a < R.order() && ok; ++a) ok = in(colon[i][a]);
    }
    if (!ok) continue;
    std::vector<ElementSet> f;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) f.push_back(ideals[i].carrier());
    out.push_back(Preradical::linear_filter(R, std::move(f)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem harness

struct TheoremSide {
  std::string label;
  bool value = false;
};

struct TheoremVerdict {
  std::string id;
  std::string ring;
  /// "equivalence": all sides equal; "implication": side 0 implies side 1;
  /// "property": every side holds.
  std::string kind;
  UniverseParams params;
  std::size_t universe_size = 0;
  std::vector<TheoremSide> sides;
  bool agree = false;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"T15", "T14", "T14.3", "P14.1", "Perror1", "P12", "P8.5"};
  return ids;
}

namespace detail {

inline void settle(TheoremVerdict& v) {
  if (v.kind == "implication") v.agree = !v.sides[0].value || v.sides[1].value;
  else if (v.kind == "property") {
    v.agree = true;
    for (const auto& s : v.sides) v.agree = v.agree && s.value;
  } else {
    v.agree = true;
    for (const auto& s : v.sides) v.agree = v.agree && s.value == v.sides[0].value;
  }
}

/// First nonzero universe module that is not BJKN-prime, with its witness.
inline std::optional<std::pair<FiniteModule, BjknResult>> first_non_bjkn(const Universe& u) {
  for (const auto& M : u.modules) {
    if (M.is_zero_module()) continue;
    auto r = bjkn_prime(M);
    if (!r.value) return std::pair{M, r};
  }
  return std::nullopt;
}

inline std::string element_witness(const BjknResult& r) {
  return "every map M -> R" + std::to_string(r.element_witness->second) + " kills " +
         std::to_string(r.element_witness->first);
}

inline void verify_t15(const FiniteRing& R, const Universe& u, TheoremVerdict& v) {
  v.kind = "equivalence";
  auto ideals = enumerate_ideals(R, Sidedness::two_sided);
  const bool simple = ideals.size() == 2;
  if (!simple) v.witnesses.emplace_back("ideal", ideals[1].carrier().to_string());
  bool all_prime = true;
  for (const auto& M : u.modules) {
    if (M.is_zero_module()) continue;
    auto p = prime_module(M);
    if (!p.value) {
      all_prime = false;
      v.witnesses.emplace_back("module", M.description());
      v.witnesses.emplace_back("module_witness", "I=" + p.ideal_witness->first.carrier().to_string() +
                                                     " N=" + p.ideal_witness->second.to_string() +
                                                     ": I N = 0, I M != 0");
      break;
    }
  }
  v.sides = {{"ring is simple", simple}, {"every universe module is prime", all_prime}};
}

inline void verify_t14(const FiniteRing& R, const Universe& u, const Caps& caps, TheoremVerdict& v) {
  v.kind = "equivalence";
  auto c = classify_ring(R, u);
  const bool lhs = c.is_left_semiartinian_on_universe && c.is_left_local;
  for (const auto& [flag, w] : c.witnesses)
    if (flag == "left_local" || flag == "left_semiartinian_on_universe") v.witnesses.emplace_back(flag, w);
  auto lep = enumerate_lep(R, caps);
  v.notes.push_back(std::to_string(lep.size()) + " linear filters");
  for (const auto& s : lep)
    for (const auto& M : u.modules)
      if (!left_exact_on(s, M))
        throw InternalInconsistency("filter preradical " + s.describe() + " not left exact on " + M.description());
  bool all_first = true;
  for (const auto& M : u.modules) {
    if (M.is_zero_module()) continue;
    if (auto w = A_first_witness(M, lep)) {
      all_first = false;
      v.witnesses.emplace_back("module", M.description());
      v.witnesses.emplace_back("module_witness", lep[w->member].describe() + " kills " +
                                                     w->submodule.to_string() + " but not M");
      break;
    }
  }
  v.sides = {{"left semiartinian and left local", lhs}, {"every universe module is first for all filters", all_first}};
}

inline void verify_t14_3(const FiniteRing& R, const Universe& u, TheoremVerdict& v) {
  v.kind = "equivalence";
  auto c = classify_ring(R, u);
  const bool one = c.is_left_semiartinian_on_universe && c.is_left_local && c.is_V_ring;
  for (const auto& [flag, w] : c.witnesses)
    if (flag == "left_local" || flag == "left_semiartinian_on_universe" || flag == "V_ring" ||
        flag == "homogeneous_semisimple")
      v.witnesses.emplace_back(flag, w);
  auto bad = first_non_bjkn(u);
  if (bad) {
    v.witnesses.emplace_back("module", bad->first.description() + " is not BJKN-prime");
    v.witnesses.emplace_back("module_witness", element_witness(bad->second));
  }
  v.sides = {{"left semiartinian left local V-ring", one},
             {"every universe module is BJKN-prime", !bad},
             {"semisimple homogeneous ring", c.is_homogeneous_semisimple}};
}

inline void verify_p14_1(const Universe& u, TheoremVerdict& v) {
  v.kind = "property";
  std::size_t pairs = 0;
  bool all = true;
  for (const auto& E : u.modules) {
    if (E.is_zero_module() || !is_injective(E)) continue;
    auto L = enumerate_submodules(E);
    for (auto a : L.atoms()) {
      auto S = L[a];
      auto lp = lattice_predicates(S);
      if (S.is_whole() || !lp.is_essential) continue;
      ++pairs;
      v.notes.push_back(S.to_string() + " in " + E.description());
      if (!lp.is_superfluous) {
        all = false;
        v.witnesses.emplace_back("pair", S.to_string() + " not superfluous in " + E.description());
      }
    }
  }
  if (pairs == 0) v.notes.push_back("no simple module with a proper injective hull in the universe");
  v.sides = {{"every proper simple-in-hull pair is superfluous", all}};
}

inline void verify_perror1(const FiniteRing& R, const Universe& u, TheoremVerdict& v) {
  v.kind = "implication";
  auto bad = first_non_bjkn(u);
  if (bad) v.witnesses.emplace_back("module", bad->first.description() + " is not BJKN-prime");
  auto bkn = bkn_failure(u);
  if (bkn)
    v.witnesses.emplace_back("pair", "Hom(" + bkn->first.description() + ", " + bkn->second.description() + ") = 0");
  v.sides = {{"every universe module is BJKN-prime", !bad}, {"BKN on universe", !bkn}};
  if (bad && !bkn) v.notes.push_back("converse fails on " + R.description());
}

inline bool in_script_P_soc_all(const Universe& u, TheoremVerdict& v, bool record) {
  for (const auto& M : u.modules)
    if (auto w = A_fully_first_witness(M, {Preradical::soc()})) {
      if (record) v.witnesses.emplace_back("module", M.description() + ": soc(" + w->submodule.to_string() + ") = 0");
      return false;
    }
  return true;
}

inline void verify_p12(const Universe& u, TheoremVerdict& v) {
  v.kind = "equivalence";
  bool all_p = true;
  for (const auto& M : u.modules)
    if (!M.is_zero_module() && !is_A_first(M, {Preradical::soc()})) {
      all_p = false;
      v.witnesses.emplace_back("module", M.description() + " not soc-first");
      break;
    }
  v.sides = {{"every universe module is soc-first", all_p},
             {"every universe module is soc-fully-first", in_script_P_soc_all(u, v, true)}};
}

inline void verify_p8_5(const FiniteRing& R, const Universe& u, TheoremVerdict& v) {
  v.kind = "equivalence";
  auto c = classify_ring(R, u);
  v.sides = {{"every universe module is soc-fully-first", in_script_P_soc_all(u, v, true)},
             {"left semiartinian on universe", c.is_left_semiartinian_on_universe}};
}

} // namespace detail

inline TheoremVerdict verify_theorem(const std::string& id, const FiniteRing& R, const Universe& u,
                                     const Caps& caps = {}) {
  require_same_ring(R, u.ring);
  const auto start = std::chrono::steady_clock::now();
  TheoremVerdict v;
  v.id = id;
  v.ring = R.description();
  v.params = u.params;
  v.universe_size = u.size();
  if (id == "T15") detail::verify_t15(R, u, v);
  else if (id == "T14") detail::verify_t14(R, u, caps, v);
  else if (id == "T14.3") detail::verify_t14_3(R, u, v);
  else if (id == "P14.1") detail::verify_p14_1(u, v);
  else if (id == "Perror1") detail::verify_perror1(R, u, v);
  else if (id == "P12") detail::verify_p12(u, v);
  else if (id == "P8.5") detail::verify_p8_5(R, u, v);
  else throw InvalidArgument("unknown theorem id: " + id);
  detail::settle(v);
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

/// A simple S inside E with E injective and S essential in E, so E is the
/// injective hull of S; reports whether S is superfluous in E.
inline bool simple_superfluous_in_hull(const Submodule& S) {
  const FiniteModule& E = S.parent();
  if (auto w = baer_failure(E))
    throw InvalidArgument(E.description() + " is not injective (Baer fails on " +
                          w->left_ideal.carrier().to_string() + ")");
  auto lp = lattice_predicates(S);
  if (!lp.is_atom) throw InvalidArgument(S.to_string() + " is not a simple submodule");
  if (!lp.is_essential) throw InvalidArgument(S.to_string() + " is not essential in " + E.description());
  return lp.is_superfluous;
}

/// A nonzero universe module that is prime but not BJKN-prime, if any.
inline std::optional<FiniteModule> find_prime_not_bjkn(const Universe& u) {
  for (const auto& M : u.modules)
    if (!M.is_zero_module() && is_prime_module(M) && !is_bjkn_prime(M)) return M;
  return std::nullopt;
}

/// A nonzero universe module that is diuniform but not BJKN-prime, if any.
inline std::optional<FiniteModule> find_diuniform_not_bjkn(const Universe& u) {
  for (const auto& M : u.modules)
    if (!M.is_zero_module() && is_diuniform(M) && !is_bjkn_prime(M)) return M;
  return std::nullopt;
}

} // namespace modlab
