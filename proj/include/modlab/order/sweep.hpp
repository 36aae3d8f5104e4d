#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "modlab/order/random.hpp"

namespace modlab::order {

/// Checks on one action: atoms are first; x is first iff 0 is prime for the
/// action restricted to [0, x]; first elements stay first under pullback along
/// `f` and under restriction to `subset`.
inline std::vector<std::string> action_law_violations(const PosetAction& a, const FinitePoset& P2,
                                                      const std::vector<std::size_t>& f,
                                                      const std::vector<std::size_t>& subset) {
  std::vector<std::string> out;
  const auto& L = a.lattice();
  for (auto x : L.atoms())
    if (!is_first(a, x)) out.push_back("atom " + std::to_string(x) + " is not first");
  auto pulled = pullback(a, P2, f);
  auto restricted = restrict_to_subposet(a, subset);
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (x == L.bottom()) continue;
    auto r = restrict_action(a, x);
    const bool first = is_first(a, x);
    if (first != is_prime(r.action, r.action.lattice().bottom()))
      out.push_back("first/prime bridge fails at " + std::to_string(x));
    if (first && !is_first(pulled, x)) out.push_back("pullback loses firstness at " + std::to_string(x));
    if (first && !is_first(restricted, x)) out.push_back("restriction loses firstness at " + std::to_string(x));
  }
  return out;
}

struct SweepResult {
  std::size_t instances = 0;
  std::size_t elements_checked = 0;
  std::size_t largest_lattice = 0;
  std::size_t largest_poset = 0;
  std::vector<std::string> violations;
};

/// Random instances with |P| <= 4 and |L| <= 8.
inline SweepResult random_action_sweep(std::uint64_t seed, std::size_t instances) {
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> psize(1, 4);
  SweepResult res;
  for (std::size_t i = 0; i < instances; ++i) {
    auto P = random_poset(rng, psize(rng));
    auto L = random_lattice(rng, 8);
    auto a = random_action(rng, P, L);
    auto P2 = random_poset(rng, psize(rng));
    auto f = random_monotone_map(rng, P2, P);
    std::vector<std::size_t> subset;
    std::bernoulli_distribution keep(0.5);
    for (std::size_t s = 0; s < P.size(); ++s)
      if (keep(rng)) subset.push_back(s);
    if (subset.empty()) subset.push_back(0);
    for (auto& v : action_law_violations(a, P2, f, subset))
      res.violations.push_back("instance " + std::to_string(i) + ": " + v);
    ++res.instances;
    res.elements_checked += L.size();
    res.largest_lattice = std::max(res.largest_lattice, L.size());
    res.largest_poset = std::max(res.largest_poset, P.size());
  }
  return res;
}

} // namespace modlab::order
