#pragma once

// Finite left modules over a FiniteRing and their submodules.
//
// A module is an additive table plus an action table (ring element, module
// element) -> module element. Module handles are immutable; the data block
// carries a few lazily filled caches (submodule-as-module embeddings, the
// submodule lattice, hom-sets) which behave as pure memo tables.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlab/element_set.hpp"
#include "modlab/ideal.hpp"
#include "modlab/ring.hpp"

namespace modlab {

enum class ModuleKind { regular, quotient, submodule, direct_sum, raw };

class FiniteModule;
struct Embedded;

namespace detail {

struct ModuleData;

/// Submodules in canonical order plus a reverse index.
struct LatticeCore {
  std::vector<ElementSet> elements;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

using MapTables = std::vector<std::vector<Elem>>;

struct HomCacheEntry {
  std::weak_ptr<const ModuleData> target;
  std::shared_ptr<const MapTables> maps;
};

struct EmbeddedCore {
  std::shared_ptr<const ModuleData> module;
  std::vector<Elem> inclusion;
};

struct ModuleData {
  std::uint64_t id = next_object_id();
  FiniteRing ring;
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> act; // act[r * order + x]
  std::vector<Elem> neg;
  Elem zero = 0;
  ModuleKind kind = ModuleKind::raw;
  std::string description;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<ElementSet, std::shared_ptr<const EmbeddedCore>, ElementSetHash> embedded;
  mutable std::shared_ptr<const LatticeCore> lattice;
  mutable std::shared_ptr<const std::vector<bool>> fully_invariant;
  mutable std::map<std::uint64_t, HomCacheEntry> homs;
};

} // namespace detail

class FiniteModule {
public:
  FiniteModule() = default;
  explicit FiniteModule(std::shared_ptr<const detail::ModuleData> d) : d_(std::move(d)) {}

  const FiniteRing& ring() const { return d_->ring; }
  std::size_t order() const { return d_->order; }
  Elem zero() const { return d_->zero; }
  Elem add(Elem a, Elem b) const { return d_->add[a * d_->order + b]; }
  Elem neg(Elem a) const { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem x) const { return d_->act[r * d_->order + x]; }
  ModuleKind kind() const { return d_->kind; }
  const std::string& description() const { return d_->description; }
  std::uint64_t id() const { return d_->id; }
  bool is_zero_module() const { return d_->order == 1; }
  bool valid() const { return d_ != nullptr; }
  std::span<const Elem> add_table() const { return d_->add; }
  std::span<const Elem> act_table() const { return d_->act; }

  const detail::ModuleData& data() const { return *d_; }
  const std::shared_ptr<const detail::ModuleData>& shared() const { return d_; }

  friend bool operator==(const FiniteModule& a, const FiniteModule& b) { return a.d_ == b.d_; }

private:
  std::shared_ptr<const detail::ModuleData> d_;
};

inline void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (!same_ring(a, b))
    throw InvalidArgument("ring mismatch: " + a.description() + " vs " + b.description());
}

/// Exhaustive module axiom scan. Fills zero and negation tables.
inline void validate_module_tables(const FiniteRing& R, std::size_t n, const std::vector<Elem>& add,
                                   const std::vector<Elem>& act, Elem& zero, std::vector<Elem>& neg) {
  using detail::triple;
  if (n == 0) throw AxiomViolation("nonempty carrier", "order 0");
  if (add.size() != n * n || act.size() != R.order() * n) throw AxiomViolation("table shape", "size mismatch");
  for (Elem v : add)
    if (v >= n) throw AxiomViolation("closure", "addition entry out of range");
  for (Elem v : act)
    if (v >= n) throw AxiomViolation("closure", "action entry out of range");
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto X = [&](Elem r, Elem x) { return act[r * n + x]; };
  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = A(e, x) == x;
    if (ok) { zero = e; found = true; }
  }
  if (!found) throw AxiomViolation("additive identity", "none found");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", triple(a, b, 0));
      for (Elem c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive associativity", triple(a, b, c));
    }
  neg.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool inv = false;
    for (Elem b = 0; b < n && !inv; ++b)
      if (A(a, b) == zero) { neg[a] = b; inv = true; }
    if (!inv) throw AxiomViolation("additive inverse", triple(a, 0, 0));
  }
  for (Elem x = 0; x < n; ++x)
    if (X(R.one(), x) != x) throw AxiomViolation("1x = x", triple(R.one(), x, 0));
  for (Elem r = 0; r < R.order(); ++r)
    for (Elem s = 0; s < R.order(); ++s)
      for (Elem x = 0; x < n; ++x) {
        if (X(R.add(r, s), x) != A(X(r, x), X(s, x))) throw AxiomViolation("(r+s)x = rx+sx", triple(r, s, x));
        if (X(R.mul(r, s), x) != X(r, X(s, x))) throw AxiomViolation("(rs)x = r(sx)", triple(r, s, x));
      }
  for (Elem r = 0; r < R.order(); ++r)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (X(r, A(x, y)) != A(X(r, x), X(r, y))) throw AxiomViolation("r(x+y) = rx+ry", triple(r, x, y));
}

inline FiniteModule make_raw_module(const FiniteRing& R, std::vector<Elem> add, std::vector<Elem> act,
                                    const Caps& caps = {}, ModuleKind kind = ModuleKind::raw,
                                    std::string description = {}) {
  std::size_t n = 0;
  while (n * n < add.size()) ++n;
  check_cap(n, caps.module_order, "module order");
  auto d = std::make_shared<detail::ModuleData>();
  d->ring = R;
  d->order = n;
  validate_module_tables(R, n, add, act, d->zero, d->neg);
  d->add = std::move(add);
  d->act = std::move(act);
  d->kind = kind;
  d->description = description.empty() ? "raw(" + std::to_string(n) + ")" : std::move(description);
  return FiniteModule(std::move(d));
}

inline FiniteModule regular_module(const FiniteRing& R, const Caps& caps = {}) {
  std::vector<Elem> add(R.add_table().begin(), R.add_table().end());
  std::vector<Elem> act(R.mul_table().begin(), R.mul_table().end());
  return make_raw_module(R, std::move(add), std::move(act), caps, ModuleKind::regular,
                         "regular(" + R.description() + ")");
}

/// A submodule, stored as a carrier inside its parent module.
class Submodule {
public:
  Submodule() = default;
  Submodule(FiniteModule parent, ElementSet carrier) : parent_(std::move(parent)), carrier_(std::move(carrier)) {}

  const FiniteModule& parent() const { return parent_; }
  const ElementSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  bool contains(Elem e) const { return carrier_.contains(e); }
  bool is_zero() const { return carrier_.size() == 1; }
  bool is_whole() const { return carrier_.is_full(); }
  bool subset_of(const Submodule& o) const { return carrier_.subset_of(o.carrier_); }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent_ == b.parent_ && a.carrier_ == b.carrier_;
  }
  std::string to_string() const { return carrier_.to_string(); }

private:
  FiniteModule parent_;
  ElementSet carrier_;
};

inline bool is_submodule(const FiniteModule& M, const ElementSet& c) {
  if (!c.contains(M.zero())) return false;
  bool ok = true;
  c.for_each([&](Elem x) {
    if (!ok) return;
    c.for_each([&](Elem y) { ok = ok && c.contains(M.add(x, y)); });
    for (Elem r = 0; r < M.ring().order() && ok; ++r) ok = c.contains(M.act(r, x));
  });
  return ok;
}

/// Sum of two submodules: the sumset of two subgroups is already the sum.
inline ElementSet sum_carriers(const FiniteModule& M, const ElementSet& a, const ElementSet& b) {
  ElementSet out(M.order());
  a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.insert(M.add(x, y)); }); });
  return out;
}

/// Submodule generated by a set of elements.
inline ElementSet generated_carrier(const FiniteModule& M, const ElementSet& gens) {
  ElementSet span(M.order());
  span.insert(M.zero());
  std::vector<Elem> members{M.zero()};
  gens.for_each([&](Elem g) {
    if (span.contains(g)) return;
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i)
      for (Elem r = 0; r < M.ring().order(); ++r) {
        Elem e = M.add(members[i], M.act(r, g));
        if (!span.contains(e)) {
          span.insert(e);
          members.push_back(e);
        }
      }
  });
  return span;
}

inline Submodule zero_submodule(const FiniteModule& M) { return {M, ElementSet(M.order(), {M.zero()})}; }
inline Submodule whole_module(const FiniteModule& M) { return {M, ElementSet::full(M.order())}; }
inline Submodule cyclic_submodule(const FiniteModule& M, Elem x) {
  return {M, generated_carrier(M, ElementSet(M.order(), {x}))};
}
inline Submodule generated_submodule(const FiniteModule& M, const ElementSet& gens) {
  return {M, generated_carrier(M, gens)};
}
inline Submodule make_submodule(const FiniteModule& M, const ElementSet& carrier) {
  if (carrier.universe_size() != M.order() || !is_submodule(M, carrier))
    throw InvalidArgument("not a submodule: " + carrier.to_string());
  return {M, carrier};
}

inline Submodule operator+(const Submodule& a, const Submodule& b) {
  return {a.parent(), sum_carriers(a.parent(), a.carrier(), b.carrier())};
}
inline Submodule meet(const Submodule& a, const Submodule& b) { return {a.parent(), a.carrier() & b.carrier()}; }

/// A module together with an injective module map into a parent.
struct Embedded {
  FiniteModule module;
  std::vector<Elem> inclusion;

  /// Pushes a carrier of `module` into the parent.
  ElementSet push(const ElementSet& s, std::size_t parent_order) const {
    ElementSet out(parent_order);
    s.for_each([&](Elem e) { out.insert(inclusion[e]); });
    return out;
  }
};

/// The submodule N as a module in its own right; elements are numbered by
/// increasing parent index. Cached per (parent, carrier).
inline Embedded as_module(const Submodule& N) {
  const auto& pd = N.parent().data();
  {
    std::lock_guard lock(pd.cache_mutex);
    if (auto it = pd.embedded.find(N.carrier()); it != pd.embedded.end())
      return {FiniteModule(it->second->module), it->second->inclusion};
  }
  const FiniteModule& M = N.parent();
  std::vector<Elem> incl = N.carrier().elements();
  const std::size_t k = incl.size();
  std::vector<Elem> local(M.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[incl[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(k * k), act(M.ring().order() * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = local[M.add(incl[a], incl[b])];
  for (Elem r = 0; r < M.ring().order(); ++r)
    for (std::size_t a = 0; a < k; ++a) act[r * k + a] = local[M.act(r, incl[a])];
  Caps unbounded;
  unbounded.module_order = M.order();
  auto sub = make_raw_module(M.ring(), std::move(add), std::move(act), unbounded, ModuleKind::submodule,
                             "sub(" + M.description() + "," + N.carrier().to_string() + ")");
  auto core = std::make_shared<detail::EmbeddedCore>(detail::EmbeddedCore{sub.shared(), incl});
  {
    std::lock_guard lock(pd.cache_mutex);
    auto [it, inserted] = pd.embedded.emplace(N.carrier(), core);
    return {FiniteModule(it->second->module), it->second->inclusion};
  }
}

/// Rx as a module of its own.
inline Embedded cyclic_module(const FiniteModule& M, Elem x) { return as_module(cyclic_submodule(M, x)); }

struct QuotientModule {
  FiniteModule module;
  std::vector<Elem> projection;
};

/// M/N, cosets numbered by smallest representative.
inline QuotientModule quotient_module(const Submodule& N) {
  const FiniteModule& M = N.parent();
  const std::size_t n = M.order();
  std::vector<Elem> proj(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != n) continue;
    Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    N.carrier().for_each([&](Elem y) { proj[M.add(x, y)] = idx; });
  }
  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), act(M.ring().order() * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) add[a * q + b] = proj[M.add(reps[a], reps[b])];
  for (Elem r = 0; r < M.ring().order(); ++r)
    for (std::size_t a = 0; a < q; ++a) act[r * q + a] = proj[M.act(r, reps[a])];
  Caps unbounded;
  unbounded.module_order = n;
  auto mod = make_raw_module(M.ring(), std::move(add), std::move(act), unbounded, ModuleKind::quotient,
                             "quotient(" + M.description() + "," + N.carrier().to_string() + ")");
  return {std::move(mod), std::move(proj)};
}

struct DirectSum {
  FiniteModule module;
  std::vector<std::vector<Elem>> injections;
  std::vector<std::vector<Elem>> projections;
};

/// External direct sum; tuples ordered with the first summand most
/// significant.
inline DirectSum direct_sum(std::span<const FiniteModule> parts, const Caps& caps = {}) {
  if (parts.empty()) throw InvalidArgument("direct sum of no modules");
  const FiniteRing& R = parts[0].ring();
  std::size_t n = 1;
  for (const auto& p : parts) {
    require_same_ring(R, p.ring());
    n *= p.order();
    check_cap(n, caps.module_order, "module order");
  }
  const std::size_t k = parts.size();
  std::vector<std::size_t> stride(k);
  for (std::size_t i = k, s = 1; i-- > 0;) {
    stride[i] = s;
    s *= parts[i].order();
  }
  auto coord = [&](std::size_t idx, std::size_t i) { return static_cast<Elem>((idx / stride[i]) % parts[i].order()); };
  std::vector<Elem> add(n * n), act(R.order() * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) idx += parts[i].add(coord(a, i), coord(b, i)) * stride[i];
      add[a * n + b] = static_cast<Elem>(idx);
    }
    for (Elem r = 0; r < R.order(); ++r) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) idx += parts[i].act(r, coord(a, i)) * stride[i];
      act[r * n + a] = static_cast<Elem>(idx);
    }
  }
  std::string desc = "direct_sum(";
  for (std::size_t i = 0; i < k; ++i) desc += (i ? "," : "") + parts[i].description();
  DirectSum out;
  out.module = make_raw_module(R, std::move(add), std::move(act), caps, ModuleKind::direct_sum, desc + ")");
  std::size_t zero_idx = 0;
  for (std::size_t i = 0; i < k; ++i) zero_idx += parts[i].zero() * stride[i];
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> inj(parts[i].order()), proj(n);
    for (Elem x = 0; x < parts[i].order(); ++x)
      inj[x] = static_cast<Elem>(zero_idx - parts[i].zero() * stride[i] + x * stride[i]);
    for (std::size_t a = 0; a < n; ++a) proj[a] = coord(a, i);
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

inline DirectSum direct_sum(std::initializer_list<FiniteModule> parts, const Caps& caps = {}) {
  std::vector<FiniteModule> v(parts);
  return direct_sum(std::span<const FiniteModule>(v), caps);
}

/// Left annihilator of a set of module elements.
inline ElementSet annihilator(const FiniteModule& M, const ElementSet& xs) {
  ElementSet ann(M.ring().order());
  for (Elem r = 0; r < M.ring().order(); ++r) {
    bool kills = true;
    xs.for_each([&](Elem x) { kills = kills && M.act(r, x) == M.zero(); });
    if (kills) ann.insert(r);
  }
  return ann;
}

/// I * S: additive closure of {i s}.
inline ElementSet ideal_times(const FiniteModule& M, const ElementSet& ideal, const ElementSet& s) {
  ElementSet prods(M.order());
  prods.insert(M.zero());
  ideal.for_each([&](Elem i) { s.for_each([&](Elem x) { prods.insert(M.act(i, x)); }); });
  ElementSet out(M.order());
  out.insert(M.zero());
  std::vector<Elem> members{M.zero()};
  std::vector<Elem> g = prods.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem x : g) {
      Elem e = M.add(members[i], x);
      if (!out.contains(e)) {
        out.insert(e);
        members.push_back(e);
      }
    }
  return out;
}

} // namespace modlab
