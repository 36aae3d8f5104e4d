#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modlab/errors.hpp"

namespace modlab::order {

/// Finite poset on {0, ..., n-1} stored as a dense order matrix.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Validates reflexivity, antisymmetry and transitivity.
  FinitePoset(std::size_t n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    if (leq_.size() != n_ * n_) throw InvalidArgument("poset matrix has wrong shape");
    for (std::size_t a = 0; a < n_; ++a) {
      if (!le(a, a)) throw AxiomViolation("reflexivity", pair(a, a));
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && le(a, b) && le(b, a)) throw AxiomViolation("antisymmetry", pair(a, b));
        for (std::size_t c = 0; c < n_; ++c)
          if (le(a, b) && le(b, c) && !le(a, c)) throw AxiomViolation("transitivity", pair(a, c));
      }
    }
  }

  /// Reflexive-transitive closure of the given pairs (a <= b).
  static FinitePoset from_relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<char> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    for (auto [a, b] : pairs) m[a * n + b] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (m[i * n + k] && m[k * n + j]) m[i * n + j] = 1;
    return FinitePoset(n, std::move(m));
  }

  static FinitePoset chain(std::size_t n) {
    std::vector<char> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m[i * n + j] = 1;
    return FinitePoset(n, std::move(m));
  }

  static FinitePoset antichain(std::size_t n) { return from_relation(n, {}); }

  std::size_t size() const { return n_; }
  bool le(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  const std::vector<char>& matrix() const { return leq_; }

  /// The subposet induced on `subset` (listed in the new element order).
  FinitePoset induced(const std::vector<std::size_t>& subset) const {
    const std::size_t k = subset.size();
    std::vector<char> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = le(subset[i], subset[j]);
    return FinitePoset(k, std::move(m));
  }

  bool operator==(const FinitePoset&) const = default;

private:
  static std::string pair(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }

  std::size_t n_ = 0;
  std::vector<char> leq_;
};

/// f: P -> Q is order preserving.
inline bool is_monotone(const FinitePoset& P, const FinitePoset& Q, const std::vector<std::size_t>& f) {
  if (f.size() != P.size()) return false;
  for (std::size_t a = 0; a < P.size(); ++a) {
    if (f[a] >= Q.size()) return false;
    for (std::size_t b = 0; b < P.size(); ++b)
      if (P.le(a, b) && !Q.le(f[a], f[b])) return false;
  }
  return true;
}

} // namespace modlab::order
