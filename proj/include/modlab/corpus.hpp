#pragma once

#include <vector>

#include "modlab/universe.hpp"

namespace modlab {

/// The built-in test rings: cyclic(2), cyclic(3), cyclic(4), cyclic(6),
/// cyclic(8), product(cyclic(2),cyclic(2)) and matrix(cyclic(2),2).
inline std::vector<FiniteRing> corpus_rings(const Caps& caps = {}) {
  std::vector<FiniteRing> out;
  for (std::size_t n : {2, 3, 4, 6, 8}) out.push_back(make_cyclic_ring(n, caps));
  auto z2 = make_cyclic_ring(2, caps);
  out.push_back(make_product_ring({z2, z2}, caps));
  out.push_back(make_matrix_ring(z2, 2, caps));
  return out;
}

/// One generated universe per corpus ring.
inline std::vector<Universe> build_corpus(UniverseParams params = {}, const Caps& caps = {}) {
  std::vector<Universe> out;
  for (const auto& R : corpus_rings(caps)) out.push_back(generate_universe(R, params, caps));
  return out;
}

inline std::size_t corpus_module_count(const std::vector<Universe>& corpus) {
  std::size_t n = 0;
  for (const auto& u : corpus) n += u.size();
  return n;
}

} // namespace modlab
