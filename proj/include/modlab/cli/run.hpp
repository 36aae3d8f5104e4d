#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "modlab/cli/report.hpp"
#include "modlab/cli/workspace.hpp"

namespace modlab::cli {

enum ExitCode : int { exit_ok = 0, exit_parse = 1, exit_cap = 2, exit_engine = 3, exit_inconsistency = 4 };

struct RunOptions {
  /// Adds runtimes to the structured report; off by default so that identical
  /// jobs give byte-identical structured output.
  bool timing = false;
};

struct RunResult {
  Json report;
  int exit_code = exit_ok;
  double runtime_ms = 0;
};

namespace detail {

inline Json sub_json(const Submodule& s) { return s.to_string(); }

inline Json run_check(const CheckSpec& c, const Workspace& ws, const RunOptions& opt) {
  Json j{{"check", to_string(c)}};
  const auto& a = c.args;
  auto M = [&](std::size_t i) { return ws.module(a[i]); };
  auto S = [&](std::size_t i) { return ws.preradical(a[i]); };
  auto family = [&](std::size_t from) {
    std::vector<Preradical> f;
    for (std::size_t i = from; i < a.size(); ++i) f.push_back(S(i));
    return f;
  };
  const std::string& n = c.name;

  if (n == "bjkn_prime") {
    auto r = bjkn_prime(M(0));
    j["verdict"] = r.value;
    j["conditions"] = Json{{"every_submodule_cogenerates", r.every_submodule_cogenerates},
                           {"every_cyclic_cogenerates", r.every_cyclic_cogenerates},
                           {"element_pairs", r.element_pairs},
                           {"products_nonzero", r.products_nonzero}};
    if (!r.value)
      j["witness"] = Json{{"non_cogenerating_submodule", sub_json(*r.non_cogenerating)},
                          {"x", r.element_witness->first},
                          {"y", r.element_witness->second},
                          {"product_zero", Json::array({sub_json(r.product_witness->first),
                                                        sub_json(r.product_witness->second)})}};
  } else if (n == "prime") {
    auto r = prime_module(M(0));
    j["verdict"] = r.value;
    j["routes"] = Json{{"annihilators", r.by_annihilators}, {"ideal_action", r.by_ideal_action}};
    if (!r.value)
      j["witness"] = Json{{"ideal", r.ideal_witness->first.carrier().to_string()},
                          {"submodule", sub_json(r.ideal_witness->second)}};
  } else if (n == "rpid_first") {
    auto r = rpid_first(M(0));
    j["verdict"] = r.value;
    j["routes"] = Json{{"pairwise_hom", r.pairwise}, {"idempotent_family", r.family}};
    if (!r.value) j["witness"] = Json{{"N", sub_json(r.witness->first)}, {"K", sub_json(r.witness->second)}};
  } else if (n == "diuniform") {
    auto w = diuniformity_witness(M(0));
    j["verdict"] = !w;
    if (w) j["witness"] = Json{{"fully_invariant_not_essential", sub_json(*w)}};
  } else if (n == "retractable") {
    auto w = retractability_witness(M(0));
    j["verdict"] = !w;
    if (w) j["witness"] = Json{{"no_nonzero_map_onto", sub_json(*w)}};
  } else if (n == "prime_endomorphism_ring") {
    auto m = M(0);
    j["verdict"] = is_prime_endomorphism_ring(m);
    j["endomorphisms"] = endomorphisms(m).size();
  } else if (n == "firstness") {
    j["report"] = firstness_json(firstness_report(M(0)));
  } else if (n == "structure") {
    auto m = M(0);
    auto p = structural_predicates(m);
    j["order"] = m.order();
    j["submodules"] = enumerate_submodules(m).size();
    j["simple"] = p.is_simple;
    j["semisimple"] = p.is_semisimple;
    j["homogeneous_semisimple"] = p.is_homogeneous_semisimple;
    j["socle"] = sub_json(p.socle);
    j["radical"] = sub_json(p.jacobson_radical);
  } else if (n == "submodules") {
    auto L = enumerate_submodules(M(0));
    Json list = Json::array();
    for (std::size_t i = 0; i < L.size(); ++i)
      list.push_back(Json{{"index", i}, {"carrier", L.carrier(i).to_string()}, {"fully_invariant", L.fully_invariant(i)}});
    j["submodules"] = list;
  } else if (n == "submodule") {
    auto N = ws.submodule(a[0]);
    auto p = lattice_predicates(N);
    j["carrier"] = sub_json(N);
    j["essential"] = p.is_essential;
    j["superfluous"] = p.is_superfluous;
    j["simple"] = p.is_atom;
    j["fully_invariant"] = is_fully_invariant(N);
  } else if (n == "injective") {
    auto w = baer_failure(M(0));
    j["verdict"] = !w;
    if (w) j["witness"] = Json{{"left_ideal", w->left_ideal.carrier().to_string()}, {"map", describe_map(w->map)}};
  } else if (n == "homs") {
    j["count"] = hom_set(M(0), M(1), ws.caps()).size();
  } else if (n == "cogenerates") {
    auto N = M(0), X = M(1);
    j["verdict"] = cogenerates(N, X);
    j["reject"] = sub_json(reject(N, X));
  } else if (n == "evaluate") {
    auto s = S(0);
    j["preradical"] = s.describe();
    j["value"] = sub_json(s.evaluate(M(1)));
  } else if (n == "properties") {
    auto s = S(0);
    auto f = property_flags(s, ws.universe());
    j["preradical"] = s.describe();
    j["idempotent"] = f.idempotent;
    j["radical"] = f.radical;
    j["left_exact"] = f.left_exact;
    j["t_radical"] = f.t_radical;
    j["scope"] = "universe";
  } else if (n == "compare") {
    j["relation"] = to_string(compare(S(0), S(1), ws.universe()));
    j["scope"] = "universe";
  } else if (n == "a_first") {
    auto f = family(1);
    auto w = A_first_witness(M(0), f);
    j["verdict"] = !w;
    if (w) j["witness"] = Json{{"preradical", f[w->member].describe()}, {"submodule", sub_json(w->submodule)}};
  } else if (n == "a_fully_first") {
    auto f = family(1);
    auto w = A_fully_first_witness(M(0), f);
    j["verdict"] = !w;
    if (w) j["witness"] = Json{{"preradical", f[w->member].describe()}, {"submodule", sub_json(w->submodule)}};
  } else if (n == "classes") {
    auto cm = class_membership(M(0), family(1));
    j["T"] = cm.in_T;
    j["F"] = cm.in_F;
    j["P"] = cm.in_P;
    j["script_P"] = cm.in_script_P;
  } else if (n == "classify") {
    j["classification"] = classification_json(classify_ring(ws.ring(), ws.universe()));
    j["scope"] = "universe";
  } else if (n == "lep") {
    const auto& lep = ws.lep();
    Json list = Json::array();
    for (const auto& s : lep) {
      bool exact = true;
      for (const auto& U : ws.universe().modules) exact = exact && left_exact_on(s, U);
      Json ideals = Json::array();
      for (const auto& I : s.filter()) ideals.push_back(I.to_string());
      list.push_back(Json{{"filter", ideals}, {"left_exact_on_universe", exact}});
    }
    j["count"] = lep.size();
    j["filters"] = list;
  } else if (n == "verify") {
    std::vector<std::string> ids;
    for (const auto& t : a) ids.push_back(t.text);
    if (ids.empty()) ids = theorem_ids();
    Json list = Json::array();
    for (const auto& id : ids) list.push_back(verdict_json(verify_theorem(id, ws.ring(), ws.universe(), ws.caps()), opt.timing));
    j["verdicts"] = list;
  } else if (n == "superfluous_in_hull") {
    auto Sb = ws.submodule(a[0]);
    j["verdict"] = simple_superfluous_in_hull(Sb);
  } else {
    throw InvalidArgument("unknown check '" + n + "'");
  }
  return j;
}

} // namespace detail

inline Json report_header(const Workspace& ws) {
  return Json{{"schema_version", schema_version},
              {"engine_version", std::string(engine_version)},
              {"ring", ws.ring().description()}};
}

/// Runs every check in declaration order. Engine errors are recorded on the
/// failing check and the run continues; the exit code reports the most severe
/// failure (inconsistency, then cap, then other engine errors).
inline RunResult run_job(const JobSpec& spec, const Workspace& ws, const RunOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  out.report = report_header(ws);
  Json checks = Json::array();
  bool inconsistent = false, capped = false, engine = false;
  for (const auto& c : spec.checks) {
    try {
      checks.push_back(detail::run_check(c, ws, opt));
    } catch (const InternalInconsistency& e) {
      inconsistent = true;
      checks.push_back(Json{{"check", to_string(c)}, {"error", "internal-inconsistency"}, {"message", e.what()}});
    } catch (const CapExceeded& e) {
      capped = true;
      checks.push_back(Json{{"check", to_string(c)}, {"error", "cap"}, {"message", e.what()}});
    } catch (const Error& e) {
      engine = true;
      checks.push_back(Json{{"check", to_string(c)}, {"error", "engine"}, {"message", e.what()}});
    }
  }
  Json prov{{"caps", caps_json(ws.caps())}, {"universe", Json{{"depth", ws.params().depth}}}};
  if (ws.universe_built()) prov["universe"]["size"] = ws.universe().size();
  out.report["provenance"] = prov;
  out.report["checks"] = checks;
  out.exit_code = inconsistent ? exit_inconsistency : capped ? exit_cap : engine ? exit_engine : exit_ok;
  out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (opt.timing) out.report["runtime_ms"] = out.runtime_ms;
  return out;
}

} // namespace modlab::cli
