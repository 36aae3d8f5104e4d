#pragma once

#include <vector>

#include "modlab/order/action.hpp"
#include "modlab/preradical_props.hpp"

namespace modlab {

/// The action (sigma, N) -> sigma(N) of a finite family of preradicals on the
/// submodule lattice of M. Family members that agree on every submodule of M
/// share one poset element.
struct ModuleActionInstance {
  order::PosetAction action;
  SubmoduleLattice lattice;
  /// Poset element of each family member.
  std::vector<std::size_t> class_of;
  /// First family member of each poset element.
  std::vector<Preradical> representatives;
};

inline order::BoundedLattice as_bounded_lattice(const SubmoduleLattice& L) {
  const std::size_t n = L.size();
  std::vector<char> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = L.leq(i, j);
  return order::BoundedLattice(order::FinitePoset(n, std::move(m)));
}

inline ModuleActionInstance module_action_instance(const FiniteModule& M, const std::vector<Preradical>& family) {
  if (family.empty()) throw InvalidArgument("module action needs a nonempty family");
  auto L = enumerate_submodules(M);
  std::vector<FiniteModule> subs;
  for (std::size_t i = 0; i < L.size(); ++i) subs.push_back(as_module(L[i]).module);
  const std::span<const FiniteModule> span(subs);

  std::vector<std::size_t> class_of(family.size());
  std::vector<Preradical> reps;
  for (std::size_t k = 0; k < family.size(); ++k) {
    std::size_t c = 0;
    while (c < reps.size() && compare(family[k], reps[c], span) != PreradicalOrder::equal) ++c;
    if (c == reps.size()) reps.push_back(family[k]);
    class_of[k] = c;
  }
  const std::size_t np = reps.size(), nl = L.size();
  std::vector<char> leq(np * np);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      auto o = compare(reps[a], reps[b], span);
      leq[a * np + b] = o == PreradicalOrder::less || o == PreradicalOrder::equal;
    }
  std::vector<std::size_t> table(np * nl);
  for (std::size_t s = 0; s < np; ++s)
    for (std::size_t x = 0; x < nl; ++x) table[s * nl + x] = L.index_of(evaluate_on(reps[s], L[x]));
  order::PosetAction act(order::FinitePoset(np, std::move(leq)), as_bounded_lattice(L), std::move(table));
  return {std::move(act), L, std::move(class_of), std::move(reps)};
}

} // namespace modlab
