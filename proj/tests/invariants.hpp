#pragma once

// Preradical-calculus invariants checked over a universe. Each returns a list
// of human-readable violations; empty means the invariant holds.

#include <string>
#include <vector>

#include "modlab/modlab.hpp"

namespace invariants {

using namespace modlab;

/// A mixed test family over R: the named preradicals, every t-radical, every
/// left exact preradical, alpha/omega at each fully invariant submodule of the
/// regular module, beta at every submodule, plus a few composites.
inline std::vector<Preradical> test_family(const Universe& u) {
  const auto& R = u.ring;
  std::vector<Preradical> f{Preradical::soc(), Preradical::rad(), Preradical::zero(), Preradical::one()};
  for (const auto& I : enumerate_ideals(R, Sidedness::two_sided)) f.push_back(Preradical::trad(I));
  for (const auto& s : enumerate_lep(R)) f.push_back(s);
  auto RR = regular_module(R);
  auto L = enumerate_submodules(RR);
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L.fully_invariant(i)) {
      f.push_back(Preradical::alpha(L[i]));
      f.push_back(Preradical::omega(L[i]));
    }
    f.push_back(Preradical::beta(L[i]));
  }
  for (const auto& S : u.simples) {
    f.push_back(Preradical::trace(S));
    f.push_back(Preradical::reject(S));
  }
  f.push_back(Preradical::compose(Preradical::soc(), Preradical::rad()));
  f.push_back(Preradical::compose(Preradical::rad(), Preradical::soc()));
  f.push_back(Preradical::join({Preradical::soc(), Preradical::rad()}));
  f.push_back(Preradical::meet({Preradical::soc(), Preradical::rad()}));
  return f;
}

inline std::string where(const Preradical& s, const FiniteModule& M) { return s.describe() + " on " + M.description(); }

/// f(s(M)) is contained in s(N) for every f: M -> N.
inline std::vector<std::string> naturality(const std::vector<Preradical>& family, const Universe& u) {
  std::vector<std::string> out;
  for (const auto& M : u.modules)
    for (const auto& N : u.modules) {
      auto homs = hom_set(M, N);
      for (const auto& s : family) {
        auto sM = s.evaluate(M).carrier();
        auto sN = s.evaluate(N).carrier();
        for (const auto& f : homs)
          if (!f.image(sM).subset_of(sN)) {
            out.push_back("naturality: " + where(s, M) + " -> " + N.description());
            break;
          }
      }
    }
  return out;
}

/// s(A + B) = s(A) + s(B) inside the external direct sum.
inline std::vector<std::string> direct_sums(const std::vector<Preradical>& family, const Universe& u,
                                            std::size_t max_order = 64) {
  std::vector<std::string> out;
  for (const auto& A : u.modules)
    for (const auto& B : u.modules) {
      if (A.order() * B.order() > max_order) continue;
      auto D = direct_sum({A, B});
      for (const auto& s : family) {
        ElementSet expect(D.module.order());
        auto sA = s.evaluate(A).carrier().elements();
        auto sB = s.evaluate(B).carrier().elements();
        for (auto a : sA)
          for (auto b : sB) expect.insert(D.module.add(D.injections[0][a], D.injections[1][b]));
        if (!(s.evaluate(D.module).carrier() == expect))
          out.push_back("direct sum: " + s.describe() + " on " + A.description() + " + " + B.description());
      }
    }
  return out;
}

/// s(K) = s(M) meet K for every submodule K, for each left exact s.
inline std::vector<std::string> left_exact_commutation(const std::vector<Preradical>& left_exact, const Universe& u) {
  std::vector<std::string> out;
  for (const auto& M : u.modules) {
    auto L = enumerate_submodules(M);
    for (const auto& s : left_exact) {
      auto sM = s.evaluate(M);
      for (std::size_t k = 0; k < L.size(); ++k)
        if (!(evaluate_on(s, L[k]) == meet(sM, L[k]))) {
          out.push_back("left exact: " + where(s, M) + " at " + L[k].to_string());
          break;
        }
    }
  }
  return out;
}

/// For N fully invariant in M: s(M) = N iff alpha_N^M <= s <= omega_N^M,
/// with the order decided on the universe.
inline std::vector<std::string> interval_law(const std::vector<Preradical>& family, const Universe& u) {
  std::vector<std::string> out;
  auto leq = [&](const Preradical& a, const Preradical& b) {
    auto o = compare(a, b, u);
    return o == PreradicalOrder::less || o == PreradicalOrder::equal;
  };
  for (const auto& M : u.modules) {
    auto L = enumerate_submodules(M);
    for (auto i : L.fully_invariant_indices()) {
      auto lo = Preradical::alpha(L[i]);
      auto hi = Preradical::omega(L[i]);
      if (!(lo.evaluate(M) == L[i]) || !(hi.evaluate(M) == L[i]))
        out.push_back("interval endpoints: " + M.description() + " at " + L[i].to_string());
      for (const auto& s : family) {
        const bool hits = s.evaluate(M) == L[i];
        const bool between = leq(lo, s) && leq(s, hi);
        if (hits != between) out.push_back("interval law: " + where(s, M) + " at " + L[i].to_string());
      }
    }
  }
  return out;
}

/// soc equals the join of the traces of the simple modules.
inline std::vector<std::string> socle_as_join(const Universe& u) {
  std::vector<std::string> out;
  std::vector<Preradical> traces;
  for (const auto& S : u.simples) traces.push_back(Preradical::trace(S));
  auto j = Preradical::join(traces);
  for (const auto& M : u.modules)
    if (!(j.evaluate(M) == Preradical::soc().evaluate(M))) out.push_back("soc join: " + M.description());
  return out;
}

/// Every nonzero module of u is first for every left exact preradical.
inline std::optional<std::pair<FiniteModule, Preradical>> non_lep_first(const Universe& u) {
  auto lep = enumerate_lep(u.ring);
  for (const auto& M : u.modules) {
    if (M.is_zero_module()) continue;
    if (auto w = A_first_witness(M, lep)) return std::pair{M, lep[w->member]};
  }
  return std::nullopt;
}

} // namespace invariants
