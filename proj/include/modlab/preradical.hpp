#pragma once

// Preradicals as evaluable expression trees.
//
// A Preradical assigns to every module U a submodule sigma(U), naturally in
// morphisms. Leaves:
//   alpha(N@M)  sum of f(N) over f in Hom(M, U), N fully invariant in M
//   omega(N@M)  intersection of f^-1(N) over f in Hom(U, M), N f.i. in M
//   beta(N@M)   as alpha, any N <= M
//   trad(I)     I U for a two-sided ideal I
//   soc, rad, zero, one
//   filter(F)   {u | Ann(u) in F} for a linear filter F of left ideals
// Nodes: join (sum), meet (intersection), comp(outer, inner).

#include <memory>
#include <string>
#include <vector>

#include "modlab/structure.hpp"

namespace modlab {

enum class PreradicalKind { alpha, omega, beta, trad, soc, rad, zero, one, filter, join, meet, compose };

class Preradical;

namespace detail {
struct PreradicalNode {
  PreradicalKind kind = PreradicalKind::zero;
  Submodule sub;
  Ideal ideal;
  FiniteRing ring;
  std::vector<ElementSet> filter;
  std::vector<Preradical> children;
  std::string label;
};
} // namespace detail

class Preradical {
public:
  Preradical() : Preradical(zero()) {}

  static Preradical alpha(const Submodule& N) {
    if (!is_fully_invariant(N))
      throw InvalidArgument("alpha needs a fully invariant submodule, got " + N.to_string());
    return leaf(PreradicalKind::alpha, N);
  }
  static Preradical omega(const Submodule& N) {
    if (!is_fully_invariant(N))
      throw InvalidArgument("omega needs a fully invariant submodule, got " + N.to_string());
    return leaf(PreradicalKind::omega, N);
  }
  static Preradical beta(const Submodule& N) { return leaf(PreradicalKind::beta, N); }
  /// tr_M = alpha(M@M).
  static Preradical trace(const FiniteModule& M) { return leaf(PreradicalKind::alpha, whole_module(M)); }
  /// Reject of M: omega(0@M).
  static Preradical reject(const FiniteModule& M) { return leaf(PreradicalKind::omega, zero_submodule(M)); }

  static Preradical trad(const Ideal& I) {
    if (!is_ideal(I.ring(), I.carrier(), Sidedness::two_sided))
      throw InvalidArgument("trad needs a two-sided ideal, got " + I.carrier().to_string());
    auto n = std::make_shared<detail::PreradicalNode>();
    n->kind = PreradicalKind::trad;
    n->ideal = I;
    n->ring = I.ring();
    return Preradical(std::move(n));
  }
  static Preradical soc() { return simple(PreradicalKind::soc); }
  static Preradical rad() { return simple(PreradicalKind::rad); }
  static Preradical zero() { return simple(PreradicalKind::zero); }
  static Preradical one() { return simple(PreradicalKind::one); }

  /// Left exact preradical of a linear filter of left ideals.
  static Preradical linear_filter(const FiniteRing& R, std::vector<ElementSet> filter, std::string label = {}) {
    auto n = std::make_shared<detail::PreradicalNode>();
    n->kind = PreradicalKind::filter;
    n->ring = R;
    std::sort(filter.begin(), filter.end(), CanonicalLess{});
    n->filter = std::move(filter);
    n->label = std::move(label);
    return Preradical(std::move(n));
  }

  static Preradical join(std::vector<Preradical> parts) { return node(PreradicalKind::join, std::move(parts)); }
  static Preradical meet(std::vector<Preradical> parts) { return node(PreradicalKind::meet, std::move(parts)); }
  /// outer o inner: inner is evaluated first.
  static Preradical compose(Preradical outer, Preradical inner) {
    return node(PreradicalKind::compose, {std::move(outer), std::move(inner)});
  }

  PreradicalKind kind() const { return n_->kind; }
  const Submodule& submodule() const { return n_->sub; }
  const Ideal& ideal() const { return n_->ideal; }
  const std::vector<Preradical>& children() const { return n_->children; }
  const std::vector<ElementSet>& filter() const { return n_->filter; }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : n_->children) d = std::max(d, c.depth());
    return d + 1;
  }

  std::string describe() const {
    switch (n_->kind) {
    case PreradicalKind::alpha:
    case PreradicalKind::omega:
    case PreradicalKind::beta: {
      const char* name = n_->kind == PreradicalKind::alpha ? "alpha" : n_->kind == PreradicalKind::omega ? "omega" : "beta";
      return std::string(name) + "(" + n_->sub.to_string() + "@" + n_->sub.parent().description() + ")";
    }
    case PreradicalKind::trad: return "trad(" + n_->ideal.carrier().to_string() + ")";
    case PreradicalKind::soc: return "soc";
    case PreradicalKind::rad: return "rad";
    case PreradicalKind::zero: return "zero";
    case PreradicalKind::one: return "one";
    case PreradicalKind::filter: {
      if (!n_->label.empty()) return n_->label;
      std::string s = "filter(";
      for (std::size_t i = 0; i < n_->filter.size(); ++i) s += (i ? "," : "") + n_->filter[i].to_string();
      return s + ")";
    }
    case PreradicalKind::join:
    case PreradicalKind::meet:
    case PreradicalKind::compose: {
      std::string s = n_->kind == PreradicalKind::join ? "join(" : n_->kind == PreradicalKind::meet ? "meet(" : "comp(";
      for (std::size_t i = 0; i < n_->children.size(); ++i) s += (i ? "," : "") + n_->children[i].describe();
      return s + ")";
    }
    }
    return "?";
  }

  /// sigma(U) as a submodule of U.
  Submodule evaluate(const FiniteModule& U) const;

private:
  explicit Preradical(std::shared_ptr<const detail::PreradicalNode> n) : n_(std::move(n)) {}

  static Preradical leaf(PreradicalKind k, const Submodule& N) {
    auto n = std::make_shared<detail::PreradicalNode>();
    n->kind = k;
    n->sub = N;
    n->ring = N.parent().ring();
    return Preradical(std::move(n));
  }
  static Preradical simple(PreradicalKind k) {
    auto n = std::make_shared<detail::PreradicalNode>();
    n->kind = k;
    return Preradical(std::move(n));
  }
  static Preradical node(PreradicalKind k, std::vector<Preradical> parts) {
    auto n = std::make_shared<detail::PreradicalNode>();
    n->kind = k;
    n->children = std::move(parts);
    return Preradical(std::move(n));
  }

  std::shared_ptr<const detail::PreradicalNode> n_;
};

/// Sum of f(N) over all f in Hom(M, U).
inline ElementSet sum_of_images(const Submodule& N, const FiniteModule& U) {
  ElementSet out(U.order(), {U.zero()});
  for (const auto& f : hom_set(N.parent(), U)) out = sum_carriers(U, out, f.image(N.carrier()));
  return out;
}

/// Intersection of f^-1(N) over all f in Hom(U, M); all of U when the hom-set
/// is empty (it never is: the zero map exists).
inline ElementSet intersection_of_preimages(const Submodule& N, const FiniteModule& U) {
  ElementSet out = ElementSet::full(U.order());
  for (const auto& f : hom_set(U, N.parent())) out &= f.preimage(N.carrier());
  return out;
}

inline Submodule Preradical::evaluate(const FiniteModule& U) const {
  const auto& n = *n_;
  if (n.ring.valid()) require_same_ring(n.ring, U.ring());
  switch (n.kind) {
  case PreradicalKind::alpha:
  case PreradicalKind::beta: return {U, sum_of_images(n.sub, U)};
  case PreradicalKind::omega: return {U, intersection_of_preimages(n.sub, U)};
  case PreradicalKind::trad: return {U, ideal_times(U, n.ideal.carrier(), ElementSet::full(U.order()))};
  case PreradicalKind::soc: return socle(U);
  case PreradicalKind::rad: return jacobson_radical(U);
  case PreradicalKind::zero: return zero_submodule(U);
  case PreradicalKind::one: return whole_module(U);
  case PreradicalKind::filter: {
    ElementSet out(U.order());
    for (Elem u = 0; u < U.order(); ++u) {
      auto ann = annihilator(U, ElementSet(U.order(), {u}));
      if (std::binary_search(n.filter.begin(), n.filter.end(), ann, CanonicalLess{})) out.insert(u);
    }
    return {U, out};
  }
  case PreradicalKind::join: {
    ElementSet out(U.order(), {U.zero()});
    for (const auto& c : n.children) out = sum_carriers(U, out, c.evaluate(U).carrier());
    return {U, out};
  }
  case PreradicalKind::meet: {
    ElementSet out = ElementSet::full(U.order());
    for (const auto& c : n.children) out &= c.evaluate(U).carrier();
    return {U, out};
  }
  case PreradicalKind::compose: {
    auto inner = n.children[1].evaluate(U);
    auto emb = as_module(inner);
    auto outer = n.children[0].evaluate(emb.module);
    return {U, emb.push(outer.carrier(), U.order())};
  }
  }
  throw InvalidArgument("unknown preradical kind");
}

inline Submodule evaluate(const Preradical& sigma, const FiniteModule& U) { return sigma.evaluate(U); }

/// sigma applied to a submodule K of M (K viewed as a module), pushed back
/// into M.
inline Submodule evaluate_on(const Preradical& sigma, const Submodule& K) {
  auto emb = as_module(K);
  return {K.parent(), emb.push(sigma.evaluate(emb.module).carrier(), K.parent().order())};
}

/// A *_M B = beta_A^M(B): sum of f(A) over f in Hom(M, B), as a submodule of M.
inline Submodule product_in(const Submodule& A, const Submodule& B) {
  if (!(A.parent() == B.parent())) throw InvalidArgument("product_in: submodules of different modules");
  auto embB = as_module(B);
  auto inB = sum_of_images(A, embB.module);
  return {A.parent(), embB.push(inB, A.parent().order())};
}

/// The literal reading sum of f(A) over f in Hom(A, B). Kept for comparison
/// with product_in only.
inline Submodule product_hom_AB(const Submodule& A, const Submodule& B) {
  if (!(A.parent() == B.parent())) throw InvalidArgument("product_hom_AB: submodules of different modules");
  auto embA = as_module(A);
  auto embB = as_module(B);
  ElementSet out(embB.module.order(), {embB.module.zero()});
  for (const auto& f : hom_set(embA.module, embB.module))
    out = sum_carriers(embB.module, out, f.image(ElementSet::full(embA.module.order())));
  return {A.parent(), embB.push(out, A.parent().order())};
}

} // namespace modlab
