#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "modlab/cli/app.hpp"

using namespace modlab;
using namespace modlab::cli;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run(std::vector<std::string> args) {
  args.insert(args.begin(), "modlab");
  std::ostringstream out, err;
  int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("modlab_test_" + name + ".job");
  std::ofstream(p) << text;
  return p.string();
}

RunResult run_doc(const std::string& doc) {
  auto spec = parse_job_syntax(doc);
  Workspace ws(spec, Caps{});
  return run_job(spec, ws);
}

const char* z4_doc = R"(# Z4 with a composite preradical
[ring]
cyclic(4)

[modules]
Q = quotient(regular, 1)

[preradicals]
s = comp(soc, trad(I2))

[checks]
bjkn_prime regular
evaluate s regular
classify
)";

} // namespace

TEST(JobSyntax, ParseErrorCarriesLineAndColumn) {
  try {
    parse_job_syntax("[ring]\ncyclic(4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
  try {
    parse_job_syntax("[ring]\ncyclic(4)\n[checks]\n  bjkn_prime $\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 14u);
  }
  EXPECT_THROW(parse_job_syntax("[nope]\n"), ParseError);
  EXPECT_THROW(parse_job_syntax("[modules]\nA = regular\n"), ParseError);
}

TEST(JobSyntax, RoundTripThroughCanonicalForm) {
  auto spec = parse_job_syntax(z4_doc);
  auto printed = print_job(spec);
  auto again = parse_job_syntax(printed);
  EXPECT_EQ(spec, again);
  EXPECT_EQ(printed, print_job(again));
}

TEST(JobSyntax, TermsAndPositions) {
  auto t = parse_term("raw(add=[[0, 1], [1, 0]], mul=[[0, 0], [0, 1]])");
  EXPECT_EQ(t.kind, Term::Kind::call);
  ASSERT_EQ(t.args.size(), 2u);
  EXPECT_EQ(t.args[0].kind, Term::Kind::keyed);
  auto at = parse_term("3@D");
  EXPECT_EQ(at.kind, Term::Kind::at);
  EXPECT_EQ(to_string(at), "3@D");
}

TEST(Workspace, UnresolvedReferenceIsParseError) {
  try {
    parse_job("[ring]\ncyclic(4)\n[checks]\nbjkn_prime Missing\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 12u);
    EXPECT_NE(std::string(e.what()).find("Missing"), std::string::npos);
  }
}

TEST(Workspace, ReservedAndDuplicateNames) {
  EXPECT_THROW(parse_job("[ring]\ncyclic(4)\n[modules]\nregular = quotient(regular, 1)\n"), ParseError);
  EXPECT_THROW(parse_job("[ring]\ncyclic(4)\n[modules]\nA = regular\nA = regular\n"), ParseError);
  EXPECT_THROW(parse_job("[ring]\ncyclic(4)\n[preradicals]\nsoc = rad\n"), ParseError);
}

TEST(Workspace, AxiomViolationIsParseError) {
  EXPECT_THROW(parse_job("[ring]\nraw(add=[[0,1],[1,0]], mul=[[0,1],[1,1]])\n"), ParseError);
}

TEST(Workspace, CapIsNotParseError) { EXPECT_THROW(parse_job("[ring]\ncyclic(64)\n"), CapExceeded); }

TEST(Workspace, CompositePreradicalHasDepthTwo) {
  auto spec = parse_job_syntax(z4_doc);
  Workspace ws(spec, Caps{});
  auto s = ws.preradical(parse_term("s"));
  EXPECT_EQ(s.depth(), 2u);
  EXPECT_EQ(s.evaluate(ws.module(parse_term("regular"))).to_string(), "{0,2}");
  EXPECT_EQ(ws.module(parse_term("Q")).order(), 2u);
}

TEST(Run, ClassifyReportsVRingWitness) {
  auto r = run_doc(z4_doc);
  EXPECT_EQ(r.exit_code, exit_ok);
  const auto& c = r.report["checks"][2]["classification"];
  EXPECT_FALSE(c["flags"]["V_ring"].get<bool>());
  bool found = false;
  for (const auto& w : c["witnesses"]) found = found || w["kind"] == "V_ring";
  EXPECT_TRUE(found);
}

TEST(Run, StructuredOutputIsDeterministic) {
  auto a = run_doc(z4_doc).report.dump();
  auto b = run_doc(z4_doc).report.dump();
  EXPECT_EQ(a, b);
  auto path = write_temp("det", z4_doc);
  auto x = run({"--format", "structured", "check", path});
  auto y = run({"--format", "structured", "check", path});
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(x.out.find("runtime"), std::string::npos);
  auto t = run({"--format", "structured", "--timing", "check", path});
  EXPECT_NE(t.out.find("runtime_ms"), std::string::npos);
}

TEST(Run, EmptyChecksSucceed) {
  auto r = run_doc("[ring]\ncyclic(2)\n");
  EXPECT_EQ(r.exit_code, exit_ok);
  EXPECT_TRUE(r.report["checks"].empty());
}

TEST(Run, EngineErrorOnOneCheckKeepsOthers) {
  auto r = run_doc("[ring]\ncyclic(4)\n[checks]\nsuperfluous_in_hull 0@regular\nbjkn_prime regular\n");
  EXPECT_EQ(r.exit_code, exit_engine);
  EXPECT_EQ(r.report["checks"][0]["error"], "engine");
  EXPECT_FALSE(r.report["checks"][1]["verdict"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", write_temp("parse", "[ring]\ncyclic(4\n")}).code, exit_parse);
  EXPECT_EQ(run({"verify", "cyclic(32)"}).code, exit_cap);
  EXPECT_EQ(run({"--cap-ring", "32", "verify", "cyclic(32)", "T15"}).code, exit_ok);
  EXPECT_EQ(run({"--format", "xml", "check", "x"}).code, exit_parse);
  EXPECT_EQ(run({"verify", "cyclic(4)", "T99"}).code, exit_parse);
  EXPECT_EQ(run({}).code, exit_parse);
  EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, ParseErrorMessageNamesPosition) {
  auto r = run({"check", write_temp("pos", "[ring]\ncyclic(4)\n[modules]\nA = quotient(regular, 9)\n")});
  EXPECT_EQ(r.code, exit_parse);
  EXPECT_NE(r.err.find("line 4, column 23"), std::string::npos) << r.err;
}

TEST(Cli, VerifyPrintsVerdicts) {
  auto r = run({"verify", "matrix(cyclic(2),2)", "T14.3", "T15"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("T14.3"), std::string::npos);
  EXPECT_NE(r.out.find("agree: true"), std::string::npos);
}

TEST(Cli, UniverseDepthOverride) {
  auto r = run({"--universe-depth", "1", "--format", "structured", "verify", "cyclic(4)", "T15"});
  ASSERT_EQ(r.code, exit_ok);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["provenance"]["universe"]["depth"], 1);
  EXPECT_EQ(j["provenance"]["universe"]["size"], 2);
}

TEST(Cli, SamplesAreValid) {
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(MODLAB_SAMPLES_DIR)) {
    if (e.path().extension() != ".job") continue;
    ++n;
    EXPECT_EQ(run({"define", e.path().string()}).code, exit_ok) << e.path();
    EXPECT_EQ(run({"check", e.path().string()}).code, exit_ok) << e.path();
  }
  EXPECT_GE(n, 3u);
}
