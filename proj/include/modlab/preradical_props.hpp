#pragma once

#include <string>

#include "modlab/preradical.hpp"
#include "modlab/universe.hpp"

namespace modlab {

/// Each flag means "holds on every module of the universe" and nothing more.
struct PropertyFlags {
  bool idempotent = true;
  bool radical = true;
  bool left_exact = true;
  bool t_radical = true;
  bool operator==(const PropertyFlags&) const = default;
};

inline bool idempotent_on(const Preradical& s, const FiniteModule& U) {
  auto v = s.evaluate(U);
  return evaluate_on(s, v) == v;
}

inline bool radical_on(const Preradical& s, const FiniteModule& U) {
  auto q = quotient_module(s.evaluate(U));
  return s.evaluate(q.module).is_zero();
}

/// sigma(N) = sigma(U) meet N for every submodule N of U.
inline bool left_exact_on(const Preradical& s, const FiniteModule& U) {
  auto whole = s.evaluate(U);
  auto L = enumerate_submodules(U);
  for (std::size_t i = 0; i < L.size(); ++i)
    if (evaluate_on(s, L[i]).carrier() != (whole.carrier() & L.carrier(i))) return false;
  return true;
}

/// sigma(U) = sigma(R) U.
inline bool t_radical_on(const Preradical& s, const FiniteModule& U) {
  auto sR = s.evaluate(regular_module(U.ring())).carrier();
  return s.evaluate(U).carrier() == ideal_times(U, sR, ElementSet::full(U.order()));
}

inline PropertyFlags property_flags(const Preradical& s, const Universe& u) {
  if (u.modules.empty()) throw InvalidArgument("property_flags needs a nonempty universe");
  PropertyFlags f;
  for (const auto& U : u.modules) {
    f.idempotent = f.idempotent && idempotent_on(s, U);
    f.radical = f.radical && radical_on(s, U);
    f.left_exact = f.left_exact && left_exact_on(s, U);
    f.t_radical = f.t_radical && t_radical_on(s, U);
  }
  return f;
}

enum class PreradicalOrder { less, greater, equal, incomparable };

inline const char* to_string(PreradicalOrder o) {
  switch (o) {
  case PreradicalOrder::less: return "<=";
  case PreradicalOrder::greater: return ">=";
  case PreradicalOrder::equal: return "=";
  case PreradicalOrder::incomparable: return "incomparable";
  }
  return "?";
}

/// Pointwise containment over the universe modules.
inline PreradicalOrder compare(const Preradical& a, const Preradical& b, std::span<const FiniteModule> modules) {
  bool le = true, ge = true;
  for (const auto& U : modules) {
    const auto x = a.evaluate(U).carrier();
    const auto y = b.evaluate(U).carrier();
    le = le && x.subset_of(y);
    ge = ge && y.subset_of(x);
  }
  if (le && ge) return PreradicalOrder::equal;
  if (le) return PreradicalOrder::less;
  if (ge) return PreradicalOrder::greater;
  return PreradicalOrder::incomparable;
}

inline PreradicalOrder compare(const Preradical& a, const Preradical& b, const Universe& u) {
  return compare(a, b, std::span<const FiniteModule>(u.modules));
}

/// Value at U of the largest idempotent preradical below sigma: the fixpoint of
/// U >= sigma(U) >= sigma(sigma(U)) >= ...
inline Submodule idempotent_core(const Preradical& s, const FiniteModule& U) {
  Submodule cur = whole_module(U);
  for (;;) {
    auto next = evaluate_on(s, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

/// Value at U of the least radical above sigma: K_0 = sigma(U),
/// K_{n+1} = preimage in U of sigma(U/K_n), until stable.
inline Submodule radical_closure(const Preradical& s, const FiniteModule& U) {
  Submodule cur = s.evaluate(U);
  for (;;) {
    auto q = quotient_module(cur);
    auto top = s.evaluate(q.module).carrier();
    ElementSet pre(U.order());
    for (Elem x = 0; x < U.order(); ++x)
      if (top.contains(q.projection[x])) pre.insert(x);
    Submodule next{U, pre};
    if (next == cur) return cur;
    cur = next;
  }
}

} // namespace modlab
