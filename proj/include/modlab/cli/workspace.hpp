#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlab/classifier.hpp"
#include "modlab/cli/job.hpp"

namespace modlab::cli {

/// Argument kinds of a check: M module, S preradical, N submodule reference
/// (k@M), T theorem id. A trailing '*' makes the last kind repeatable.
inline const std::map<std::string, std::string>& check_signatures() {
  static const std::map<std::string, std::string> sigs{
      {"bjkn_prime", "M"},  {"prime", "M"},      {"rpid_first", "M"},   {"diuniform", "M"},
      {"retractable", "M"}, {"prime_endomorphism_ring", "M"},           {"firstness", "M"},
      {"structure", "M"},   {"submodules", "M"}, {"injective", "M"},    {"homs", "MM"},
      {"cogenerates", "MM"}, {"evaluate", "SM"}, {"properties", "S"},   {"compare", "SS"},
      {"a_first", "MS*"},   {"a_fully_first", "MS*"},                   {"classes", "MS*"},
      {"classify", ""},     {"lep", ""},         {"verify", "T*"},      {"submodule", "N"},
      {"superfluous_in_hull", "N"}};
  return sigs;
}

/// A job with every name resolved to engine objects.
class Workspace {
public:
  Workspace(const JobSpec& spec, const Caps& caps) : caps_(caps) {
    params_.depth = spec.universe_depth;
    ring_ = ring(*spec.ring);
    modules_.emplace_back("regular", regular_module(ring_, caps_));
    for (const auto& b : spec.modules) {
      reserve_name(b);
      modules_.emplace_back(b.name, module(b.value));
    }
    for (const auto& b : spec.preradicals) {
      reserve_name(b);
      preradicals_.emplace_back(b.name, preradical(b.value));
    }
    for (const auto& c : spec.checks) validate(c);
  }

  const FiniteRing& ring() const { return ring_; }
  const Caps& caps() const { return caps_; }
  const UniverseParams& params() const { return params_; }
  bool universe_built() const { return universe_.has_value(); }

  const Universe& universe() const {
    if (!universe_) universe_ = generate_universe(ring_, params_, caps_);
    return *universe_;
  }

  const std::vector<Preradical>& lep() const {
    if (!lep_) lep_ = enumerate_lep(ring_, caps_);
    return *lep_;
  }

  // --- term evaluation; errors carry the term position ---

  [[noreturn]] static void fail(const Term& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  static std::size_t number(const Term& t, const char* what) {
    if (t.kind != Term::Kind::number) fail(t, std::string("expected ") + what);
    return std::stoul(t.text);
  }

  FiniteRing ring(const Term& t) const {
    return guarded(t, [&] {
      if (t.kind != Term::Kind::call) fail(t, "expected a ring such as cyclic(4)");
      const auto& a = t.args;
      if (t.text == "cyclic") {
        arity(t, 1);
        return make_cyclic_ring(number(a[0], "a ring order"), caps_);
      }
      if (t.text == "matrix") {
        arity(t, 2);
        return make_matrix_ring(ring(a[0]), number(a[1], "a matrix size"), caps_);
      }
      if (t.text == "product") {
        if (a.size() < 2) fail(t, "product needs at least two factors");
        std::vector<FiniteRing> fs;
        for (const auto& x : a) fs.push_back(ring(x));
        return make_product_ring(std::span<const FiniteRing>(fs), caps_);
      }
      if (t.text == "quotient") {
        arity(t, 2);
        auto R = ring(a[0]);
        return quotient_ring(R, ideal_of(R, a[1]), caps_).ring;
      }
      if (t.text == "raw") {
        auto add = table(keyed(t, "add"));
        auto mul = table(keyed(t, "mul"));
        return make_raw_ring(std::move(add), std::move(mul), caps_);
      }
      fail(t, "unknown ring constructor '" + t.text + "'");
    });
  }

  FiniteModule module(const Term& t) const {
    return guarded(t, [&]() -> FiniteModule {
      if (t.kind == Term::Kind::ident) {
        for (const auto& [n, m] : modules_)
          if (n == t.text) return m;
        fail(t, "unknown module '" + t.text + "'");
      }
      if (t.kind != Term::Kind::call) fail(t, "expected a module");
      const auto& a = t.args;
      if (t.text == "quotient" || t.text == "sub") {
        arity(t, 2);
        auto M = module(a[0]);
        auto N = submodule_at(M, a[1]);
        return t.text == "quotient" ? quotient_module(N).module : as_module(N).module;
      }
      if (t.text == "cyclic") {
        arity(t, 2);
        auto M = module(a[0]);
        auto x = number(a[1], "an element index");
        if (x >= M.order()) fail(a[1], "element index out of range");
        return cyclic_module(M, static_cast<Elem>(x)).module;
      }
      if (t.text == "direct_sum") {
        if (a.empty()) fail(t, "direct_sum needs summands");
        std::vector<FiniteModule> parts;
        for (const auto& x : a) parts.push_back(module(x));
        return direct_sum(std::span<const FiniteModule>(parts), caps_).module;
      }
      if (t.text == "raw") {
        auto add = table(keyed(t, "add"));
        auto act = table(keyed(t, "act"));
        return make_raw_module(ring_, std::move(add), std::move(act), caps_);
      }
      fail(t, "unknown module constructor '" + t.text + "'");
    });
  }

  /// k@M: the k-th submodule of M in canonical order.
  Submodule submodule(const Term& t) const {
    if (t.kind != Term::Kind::at) fail(t, "expected a submodule reference k@M");
    return submodule_at(module(t.args[1]), t.args[0]);
  }

  Preradical preradical(const Term& t) const {
    return guarded(t, [&]() -> Preradical {
      if (t.kind == Term::Kind::ident) {
        if (t.text == "soc") return Preradical::soc();
        if (t.text == "rad") return Preradical::rad();
        if (t.text == "zero") return Preradical::zero();
        if (t.text == "one") return Preradical::one();
        for (const auto& [n, p] : preradicals_)
          if (n == t.text) return p;
        fail(t, "unknown preradical '" + t.text + "'");
      }
      if (t.kind != Term::Kind::call) fail(t, "expected a preradical");
      const auto& a = t.args;
      if (t.text == "alpha" || t.text == "omega" || t.text == "beta") {
        arity(t, 1);
        auto N = submodule(a[0]);
        return t.text == "alpha" ? Preradical::alpha(N) : t.text == "omega" ? Preradical::omega(N) : Preradical::beta(N);
      }
      if (t.text == "trace" || t.text == "reject") {
        arity(t, 1);
        auto M = module(a[0]);
        return t.text == "trace" ? Preradical::trace(M) : Preradical::reject(M);
      }
      if (t.text == "trad") {
        arity(t, 1);
        return Preradical::trad(ideal_of(ring_, a[0]));
      }
      if (t.text == "filter") {
        arity(t, 1);
        auto k = number(a[0], "a filter index");
        if (k >= lep().size()) fail(a[0], "filter index out of range (" + std::to_string(lep().size()) + " filters)");
        return lep()[k];
      }
      if (t.text == "join" || t.text == "meet") {
        if (a.empty()) fail(t, t.text + " needs arguments");
        std::vector<Preradical> parts;
        for (const auto& x : a) parts.push_back(preradical(x));
        return t.text == "join" ? Preradical::join(std::move(parts)) : Preradical::meet(std::move(parts));
      }
      if (t.text == "comp") {
        arity(t, 2);
        return Preradical::compose(preradical(a[0]), preradical(a[1]));
      }
      fail(t, "unknown preradical constructor '" + t.text + "'");
    });
  }

  static void theorem_id(const Term& t) {
    const auto& ids = theorem_ids();
    if (t.kind != Term::Kind::ident || std::find(ids.begin(), ids.end(), t.text) == ids.end())
      fail(t, "unknown theorem id '" + to_string(t) + "'");
  }

private:
  template <class F>
  auto guarded(const Term& t, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const CapExceeded&) {
      throw;
    } catch (const AxiomViolation& e) {
      fail(t, e.what());
    } catch (const InvalidArgument& e) {
      fail(t, e.what());
    }
  }

  static void arity(const Term& t, std::size_t n) {
    if (t.args.size() != n) fail(t, t.text + " takes " + std::to_string(n) + " argument(s)");
  }

  static const Term& keyed(const Term& t, const std::string& key) {
    for (const auto& a : t.args)
      if (a.kind == Term::Kind::keyed && a.text == key) return a.args[0];
    fail(t, "missing " + key + "=[...]");
  }

  /// [[a, b], [c, d]] flattened row-major.
  static std::vector<Elem> table(const Term& t) {
    if (t.kind != Term::Kind::list) fail(t, "expected a table [[...], ...]");
    std::vector<Elem> out;
    for (const auto& row : t.args) {
      if (row.kind != Term::Kind::list) fail(row, "expected a table row [...]");
      for (const auto& x : row.args) out.push_back(static_cast<Elem>(number(x, "a table entry")));
    }
    return out;
  }

  static Ideal ideal_of(const FiniteRing& R, const Term& t) {
    std::size_t k = 0;
    if (t.kind == Term::Kind::ident && t.text.size() > 1 && t.text[0] == 'I' &&
        std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      k = std::stoul(t.text.substr(1));
    else
      k = number(t, "a two-sided ideal reference Ik");
    auto ideals = enumerate_ideals(R, Sidedness::two_sided);
    if (k >= ideals.size())
      fail(t, "ideal index out of range (" + std::to_string(ideals.size()) + " two-sided ideals)");
    return ideals[k];
  }

  static Submodule submodule_at(const FiniteModule& M, const Term& idx) {
    auto k = number(idx, "a submodule index");
    auto L = enumerate_submodules(M);
    if (k >= L.size()) fail(idx, "submodule index out of range (" + std::to_string(L.size()) + " submodules)");
    return L[k];
  }

  void reserve_name(const Binding& b) const {
    static const std::vector<std::string> reserved{"regular", "soc", "rad", "zero", "one"};
    if (std::find(reserved.begin(), reserved.end(), b.name) != reserved.end())
      fail(b.value, "'" + b.name + "' is a reserved name");
    for (const auto& [n, m] : modules_)
      if (n == b.name) fail(b.value, "'" + b.name + "' is already defined");
    for (const auto& [n, p] : preradicals_)
      if (n == b.name) fail(b.value, "'" + b.name + "' is already defined");
  }

  void validate(const CheckSpec& c) const {
    auto it = check_signatures().find(c.name);
    if (it == check_signatures().end()) throw ParseError(c.line, 1, "unknown check '" + c.name + "'");
    std::string sig = it->second;
    const bool repeat = !sig.empty() && sig.back() == '*';
    if (repeat) sig.pop_back();
    const bool bad_count = repeat ? c.args.size() + 1 < sig.size() : c.args.size() != sig.size();
    if (bad_count)
      throw ParseError(c.line, 1, "check '" + c.name + "' expects arguments " + it->second);
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      const char kind = i < sig.size() ? sig[i] : sig.back();
      const Term& a = c.args[i];
      if (kind == 'M') module(a);
      else if (kind == 'S') preradical(a);
      else if (kind == 'N') guarded(a, [&] { return submodule(a); });
      else if (kind == 'T') theorem_id(a);
    }
  }

  FiniteRing ring_;
  Caps caps_;
  UniverseParams params_;
  std::vector<std::pair<std::string, FiniteModule>> modules_;
  std::vector<std::pair<std::string, Preradical>> preradicals_;
  mutable std::optional<Universe> universe_;
  mutable std::optional<std::vector<Preradical>> lep_;
};

/// Parses and resolves; syntax, reference and axiom errors surface as
/// ParseError, cap violations as CapExceeded.
inline JobSpec parse_job(const std::string& document, const Caps& caps = {}) {
  auto spec = parse_job_syntax(document);
  Workspace check(spec, caps);
  return spec;
}

} // namespace modlab::cli
