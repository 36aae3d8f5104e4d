#pragma once

// Finite rings with identity, presented by explicit addition and
// multiplication tables.
//
// Elements are the indices 0..order-1. Structured constructors (cyclic,
// matrix, product) fix the element order by construction; raw tables keep the
// order of the input rows.

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "modlab/config.hpp"
#include "modlab/errors.hpp"

namespace modlab {

enum class RingKind { cyclic, matrix, product, quotient, raw };

namespace detail {

inline std::uint64_t next_object_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

struct RingData {
  std::uint64_t id = next_object_id();
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::vector<Elem> neg;
  Elem zero = 0;
  Elem one = 0;
  RingKind kind = RingKind::raw;
  std::string description;
};

inline std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace detail

/// Immutable handle to a finite ring. Copies share the same tables.
class FiniteRing {
public:
  FiniteRing() = default;

  std::size_t order() const { return d_->order; }
  Elem zero() const { return d_->zero; }
  Elem one() const { return d_->one; }
  Elem add(Elem a, Elem b) const { return d_->add[a * d_->order + b]; }
  Elem mul(Elem a, Elem b) const { return d_->mul[a * d_->order + b]; }
  Elem neg(Elem a) const { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  RingKind kind() const { return d_->kind; }
  const std::string& description() const { return d_->description; }
  std::uint64_t id() const { return d_->id; }
  std::span<const Elem> add_table() const { return d_->add; }
  std::span<const Elem> mul_table() const { return d_->mul; }
  bool valid() const { return d_ != nullptr; }

  /// Same handle, or identical tables.
  friend bool same_ring(const FiniteRing& a, const FiniteRing& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->order == b.d_->order && a.d_->add == b.d_->add && a.d_->mul == b.d_->mul;
  }

  /// A pair (a, b) with ab != ba, if any.
  std::optional<std::pair<Elem, Elem>> commutativity_witness() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return std::pair{a, b};
    return std::nullopt;
  }
  bool is_commutative() const { return !commutativity_witness(); }

  friend FiniteRing make_raw_ring(std::vector<Elem>, std::vector<Elem>, const Caps&, RingKind, std::string);

private:
  explicit FiniteRing(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::RingData> d_;
};

/// Exhaustive scan of every ring axiom. Throws AxiomViolation naming the first
/// failed axiom together with a witness.
inline void validate_ring_tables(std::size_t n, const std::vector<Elem>& add, const std::vector<Elem>& mul,
                                 Elem& zero, Elem& one, std::vector<Elem>& neg) {
  using detail::triple;
  if (n == 0) throw AxiomViolation("nonempty carrier", "order 0");
  if (add.size() != n * n || mul.size() != n * n)
    throw AxiomViolation("table shape", "expected " + std::to_string(n * n) + " entries");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add[i] >= n || mul[i] >= n)
      throw AxiomViolation("closure", "entry " + std::to_string(i) + " out of range");
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };

  std::optional<Elem> z;
  for (Elem e = 0; e < n && !z; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = A(e, x) == x && A(x, e) == x;
    if (ok) z = e;
  }
  if (!z) throw AxiomViolation("additive identity", "none found");
  zero = *z;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", triple(a, b, 0));
      for (Elem c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive associativity", triple(a, b, c));
        if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation("multiplicative associativity", triple(a, b, c));
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("left distributivity", triple(a, b, c));
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) throw AxiomViolation("right distributivity", triple(a, b, c));
      }
    }

  neg.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (A(a, b) == zero) { neg[a] = b; found = true; }
    if (!found) throw AxiomViolation("additive inverse", triple(a, 0, 0));
  }

  std::optional<Elem> u;
  for (Elem e = 0; e < n && !u; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = M(e, x) == x && M(x, e) == x;
    if (ok) u = e;
  }
  if (!u) throw AxiomViolation("multiplicative identity", "none found");
  one = *u;
  if (one == zero) throw AxiomViolation("one != zero", "trivial ring");
}

/// Builds a ring from raw tables in row-major order, validating every axiom.
inline FiniteRing make_raw_ring(std::vector<Elem> add, std::vector<Elem> mul, const Caps& caps = {},
                                RingKind kind = RingKind::raw, std::string description = {}) {
  std::size_t n = 0;
  while (n * n < add.size()) ++n;
  check_cap(n, caps.ring_order, "ring order");
  auto d = std::make_shared<detail::RingData>();
  d->order = n;
  validate_ring_tables(n, add, mul, d->zero, d->one, d->neg);
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->kind = kind;
  d->description = description.empty() ? "raw(" + std::to_string(n) + ")" : std::move(description);
  return FiniteRing(std::move(d));
}

inline FiniteRing make_cyclic_ring(std::size_t n, const Caps& caps = {}) {
  if (n < 2) throw AxiomViolation("one != zero", "cyclic(" + std::to_string(n) + ") is trivial");
  check_cap(n, caps.ring_order, "ring order");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return make_raw_ring(std::move(add), std::move(mul), caps, RingKind::cyclic, "cyclic(" + std::to_string(n) + ")");
}

/// k x k matrices over `base`. Entries are stored row-major; the element index
/// is the entry tuple read as a base-|base| numeral with entry (0,0) most
/// significant.
inline FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t k, const Caps& caps = {}) {
  if (k == 0) throw InvalidArgument("matrix size must be at least 1");
  const std::size_t b = base.order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    order *= b;
    check_cap(order, caps.ring_order, "ring order");
  }
  const std::size_t cells = k * k;
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> m(cells);
    for (std::size_t i = cells; i-- > 0;) {
      m[i] = static_cast<Elem>(idx % b);
      idx /= b;
    }
    return m;
  };
  auto encode = [&](const std::vector<Elem>& m) {
    std::size_t idx = 0;
    for (Elem e : m) idx = idx * b + e;
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<Elem>> mats(order);
  for (std::size_t i = 0; i < order; ++i) mats[i] = decode(i);

  std::vector<Elem> add(order * order), mul(order * order);
  std::vector<Elem> tmp(cells);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const auto& X = mats[x];
      const auto& Y = mats[y];
      for (std::size_t i = 0; i < cells; ++i) tmp[i] = base.add(X[i], Y[i]);
      add[x * order + y] = encode(tmp);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          Elem acc = base.zero();
          for (std::size_t t = 0; t < k; ++t) acc = base.add(acc, base.mul(X[r * k + t], Y[t * k + c]));
          tmp[r * k + c] = acc;
        }
      mul[x * order + y] = encode(tmp);
    }
  return make_raw_ring(std::move(add), std::move(mul), caps, RingKind::matrix,
                       "matrix(" + base.description() + "," + std::to_string(k) + ")");
}

/// Direct product; tuples are ordered lexicographically with the first factor
/// most significant.
inline FiniteRing make_product_ring(std::span<const FiniteRing> factors, const Caps& caps = {}) {
  if (factors.empty()) throw InvalidArgument("product of no rings");
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    check_cap(order, caps.ring_order, "ring order");
  }
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      t[i] = static_cast<Elem>(idx % factors[i].order());
      idx /= factors[i].order();
    }
    return t;
  };
  auto encode = [&](const std::vector<Elem>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].order() + t[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> add(order * order), mul(order * order);
  std::vector<Elem> s(factors.size()), p(factors.size());
  for (std::size_t x = 0; x < order; ++x) {
    auto X = decode(x);
    for (std::size_t y = 0; y < order; ++y) {
      auto Y = decode(y);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s[i] = factors[i].add(X[i], Y[i]);
        p[i] = factors[i].mul(X[i], Y[i]);
      }
      add[x * order + y] = encode(s);
      mul[x * order + y] = encode(p);
    }
  }
  std::string desc = "product(";
  for (std::size_t i = 0; i < factors.size(); ++i) desc += (i ? "," : "") + factors[i].description();
  return make_raw_ring(std::move(add), std::move(mul), caps, RingKind::product, desc + ")");
}

inline FiniteRing make_product_ring(std::initializer_list<FiniteRing> factors, const Caps& caps = {}) {
  std::vector<FiniteRing> v(factors);
  return make_product_ring(std::span<const FiniteRing>(v), caps);
}

} // namespace modlab
