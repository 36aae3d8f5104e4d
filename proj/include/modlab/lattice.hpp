#pragma once

#include <algorithm>
#include <memory>
#include <unordered_set>
#include <vector>

#include "modlab/morphism.hpp"

namespace modlab {

/// All submodules of a module in canonical order (index 0 is the zero
/// submodule, the last index is M), with order, join and meet.
///
/// The carrier list is computed once per module and cached; fully-invariant
/// flags are filled lazily because they need End(M).
class SubmoduleLattice {
public:
  SubmoduleLattice(FiniteModule m, std::shared_ptr<const detail::LatticeCore> core)
      : module_(std::move(m)), core_(std::move(core)) {}

  const FiniteModule& module() const { return module_; }
  std::size_t size() const { return core_->elements.size(); }
  const ElementSet& carrier(std::size_t i) const { return core_->elements[i]; }
  Submodule operator[](std::size_t i) const { return {module_, core_->elements[i]}; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return size() - 1; }

  std::size_t index_of(const ElementSet& c) const {
    auto it = core_->index.find(c);
    if (it == core_->index.end()) throw InvalidArgument("not a submodule: " + c.to_string());
    return it->second;
  }
  std::size_t index_of(const Submodule& s) const { return index_of(s.carrier()); }

  bool leq(std::size_t a, std::size_t b) const { return carrier(a).subset_of(carrier(b)); }
  std::size_t join(std::size_t a, std::size_t b) const {
    return index_of(sum_carriers(module_, carrier(a), carrier(b)));
  }
  std::size_t meet(std::size_t a, std::size_t b) const { return index_of(carrier(a) & carrier(b)); }

  /// Minimal nonzero submodules.
  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 1; j < size() && minimal; ++j)
        if (j != i && leq(j, i)) minimal = false;
      if (minimal) out.push_back(i);
    }
    return out;
  }

  /// Maximal proper submodules.
  std::vector<std::size_t> coatoms() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j + 1 < size() && maximal; ++j)
        if (j != i && leq(i, j)) maximal = false;
      if (maximal) out.push_back(i);
    }
    return out;
  }

  bool fully_invariant(std::size_t i) const { return (*fi_flags())[i]; }

  std::vector<std::size_t> fully_invariant_indices() const {
    std::vector<std::size_t> out;
    auto flags = fi_flags();
    for (std::size_t i = 0; i < size(); ++i)
      if ((*flags)[i]) out.push_back(i);
    return out;
  }

private:
  std::shared_ptr<const std::vector<bool>> fi_flags() const {
    const auto& d = module_.data();
    {
      std::lock_guard lock(d.cache_mutex);
      if (d.fully_invariant) return d.fully_invariant;
    }
    auto ends = endomorphisms(module_);
    auto flags = std::make_shared<std::vector<bool>>(size(), true);
    for (std::size_t i = 0; i < size(); ++i)
      for (const auto& f : ends)
        if (!f.image(carrier(i)).subset_of(carrier(i))) {
          (*flags)[i] = false;
          break;
        }
    std::lock_guard lock(d.cache_mutex);
    if (!d.fully_invariant) d.fully_invariant = flags;
    return d.fully_invariant;
  }

  FiniteModule module_;
  std::shared_ptr<const detail::LatticeCore> core_;
};

/// Cyclic submodules first, then sums with cyclic submodules until the family
/// stops growing. Every submodule of a finite module is a finite sum of cyclic
/// ones, so the fixpoint is the whole lattice.
inline std::vector<ElementSet> enumerate_submodule_carriers(const FiniteModule& M) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> cyclic;
  for (Elem x = 0; x < M.order(); ++x) {
    auto c = generated_carrier(M, ElementSet(M.order(), {x}));
    if (seen.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::vector<ElementSet> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      if (c.subset_of(all[i])) continue;
      auto s = sum_carriers(M, all[i], c);
      if (seen.insert(s).second) all.push_back(std::move(s));
    }
  std::sort(all.begin(), all.end(), CanonicalLess{});
  return all;
}

inline SubmoduleLattice enumerate_submodules(const FiniteModule& M) {
  const auto& d = M.data();
  {
    std::lock_guard lock(d.cache_mutex);
    if (d.lattice) return {M, d.lattice};
  }
  auto core = std::make_shared<detail::LatticeCore>();
  core->elements = enumerate_submodule_carriers(M);
  for (std::size_t i = 0; i < core->elements.size(); ++i) core->index.emplace(core->elements[i], i);
  std::lock_guard lock(d.cache_mutex);
  if (!d.lattice) d.lattice = core;
  return {M, d.lattice};
}

inline bool is_fully_invariant(const Submodule& N) {
  for (const auto& f : endomorphisms(N.parent()))
    if (!f.image(N.carrier()).subset_of(N.carrier())) return false;
  return true;
}

} // namespace modlab
