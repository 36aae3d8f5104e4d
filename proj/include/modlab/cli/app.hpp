#pragma once

// Exit codes: 0 ok, 1 parse, 2 cap, 3 engine error, 4 internal inconsistency.
// A negative mathematical verdict is still a successful run.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modlab/cli/run.hpp"
#include "modlab/corpus.hpp"
#include "modlab/order/sweep.hpp"

namespace modlab::cli {

struct GlobalOptions {
  std::size_t cap_ring = Caps{}.ring_order;
  std::size_t cap_module = Caps{}.module_order;
  std::optional<std::size_t> universe_depth;
  std::optional<std::string> format;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  bool timing = false;

  Caps caps() const {
    Caps c;
    c.ring_order = cap_ring;
    c.module_order = cap_module;
    return c;
  }
};

namespace detail {

inline std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline JobSpec load_job(const std::string& path, const GlobalOptions& g) {
  auto spec = parse_job_syntax(read_document(path));
  if (g.universe_depth) spec.universe_depth = *g.universe_depth;
  return spec;
}

inline bool structured(const JobSpec& spec, const GlobalOptions& g) {
  if (g.format) return *g.format == "structured";
  return spec.format == OutputFormat::structured;
}

inline void emit(const Json& report, bool as_json, double runtime_ms, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << render_text(report);
    out << "runtime: " << runtime_ms << " ms\n";
  }
}

inline int cmd_define(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  auto spec = load_job(path, g);
  Workspace ws(spec, g.caps());
  if (structured(spec, g)) {
    Json j = report_header(ws);
    j["valid"] = true;
    Json mods = Json::array();
    mods.push_back(Json{{"name", "regular"}, {"description", ws.module(parse_term("regular")).description()}});
    for (const auto& b : spec.modules) {
      auto m = ws.module(b.value);
      mods.push_back(Json{{"name", b.name}, {"description", m.description()}, {"order", m.order()}});
    }
    Json prs = Json::array();
    for (const auto& b : spec.preradicals) {
      auto p = ws.preradical(b.value);
      prs.push_back(Json{{"name", b.name}, {"expression", p.describe()}, {"depth", p.depth()}});
    }
    j["modules"] = mods;
    j["preradicals"] = prs;
    j["checks"] = spec.checks.size();
    j["canonical"] = print_job(spec);
    out << j.dump(2) << "\n";
  } else {
    out << print_job(spec);
  }
  return exit_ok;
}

inline int cmd_check(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  auto spec = load_job(path, g);
  Workspace ws(spec, g.caps());
  auto r = run_job(spec, ws, RunOptions{g.timing});
  emit(r.report, structured(spec, g), r.runtime_ms, out);
  return r.exit_code;
}

inline int cmd_verify(const std::string& ring, const std::vector<std::string>& ids, const GlobalOptions& g,
                      std::ostream& out) {
  JobSpec spec;
  spec.ring = parse_term(ring);
  if (g.universe_depth) spec.universe_depth = *g.universe_depth;
  CheckSpec c;
  c.name = "verify";
  for (const auto& id : ids) c.args.push_back(parse_term(id));
  spec.checks.push_back(c);
  Workspace ws(spec, g.caps());
  auto r = run_job(spec, ws, RunOptions{g.timing});
  emit(r.report, g.format && *g.format == "structured", r.runtime_ms, out);
  return r.exit_code;
}

/// Sweeps every corpus ring: firstness of each universe module, every
/// theorem verdict, filter counts, witness searches, plus a randomized sweep
/// of the poset-action laws.
inline int cmd_corpus(const GlobalOptions& g, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  UniverseParams params;
  params.depth = g.universe_depth.value_or(2);
  const auto caps = g.caps();
  Json j{{"schema_version", schema_version}, {"engine_version", std::string(engine_version)}};
  j["provenance"] = Json{{"caps", caps_json(caps)}, {"universe", Json{{"depth", params.depth}}}, {"seed", g.seed}};
  Json rings = Json::array();
  bool disagree = false;
  for (const auto& u : build_corpus(params, caps)) {
    Json rj{{"ring", u.ring.description()}, {"universe_size", u.size()}};
    Json mods = Json::array();
    for (const auto& M : u.modules) mods.push_back(firstness_json(firstness_report(M)));
    rj["modules"] = mods;
    Json ths = Json::array();
    for (const auto& id : theorem_ids()) {
      auto v = verify_theorem(id, u.ring, u, caps);
      disagree = disagree || !v.agree;
      ths.push_back(verdict_json(v, g.timing));
    }
    rj["theorems"] = ths;
    rj["linear_filters"] = enumerate_lep(u.ring, caps).size();
    auto pnb = find_prime_not_bjkn(u);
    auto dnb = find_diuniform_not_bjkn(u);
    rj["prime_not_bjkn"] = pnb ? Json(pnb->description()) : Json("not witnessed at caps");
    rj["diuniform_not_bjkn"] = dnb ? Json(dnb->description()) : Json("not witnessed at caps");
    rings.push_back(rj);
  }
  j["rings"] = rings;
  auto sweep = order::random_action_sweep(g.seed, g.samples);
  j["action_sweep"] = Json{{"instances", sweep.instances}, {"violations", sweep.violations}};
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g.timing) j["runtime_ms"] = ms;
  emit(j, g.format && *g.format == "structured", ms, out);
  return disagree || !sweep.violations.empty() ? exit_inconsistency : exit_ok;
}

} // namespace detail

/// Full command line, including the program name in args[0].
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modlab: module theory over finite rings"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--cap-ring", g.cap_ring, "largest ring order")->check(CLI::PositiveNumber);
  app.add_option("--cap-module", g.cap_module, "largest module order")->check(CLI::PositiveNumber);
  app.add_option("--universe-depth", g.universe_depth, "largest number of summands in universe modules");
  app.add_option("--format", g.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_flag("--timing", g.timing, "include runtimes in structured output");

  std::string path;
  auto* define = app.add_subcommand("define", "validate a job document and print its canonical form");
  define->add_option("file", path, "job document, or - for stdin")->required();
  define->fallthrough();
  auto* check = app.add_subcommand("check", "run the checks of a job document");
  check->add_option("file", path, "job document, or - for stdin")->required();
  check->fallthrough();
  std::string ring;
  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "replay theorems over a generated universe");
  verify->add_option("ring", ring, "ring term, e.g. 'cyclic(4)'")->required();
  verify->add_option("ids", ids, "theorem ids (default: all)");
  verify->fallthrough();
  auto* corpus = app.add_subcommand("corpus", "sweep the built-in ring and module corpus");
  corpus->add_option("--samples", g.samples, "random poset-action instances");
  corpus->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }

  try {
    if (*define) return detail::cmd_define(path, g, out);
    if (*check) return detail::cmd_check(path, g, out);
    if (*verify) return detail::cmd_verify(ring, ids, g, out);
    if (*corpus) return detail::cmd_corpus(g, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_engine;
  }
  return exit_ok;
}

} // namespace modlab::cli
