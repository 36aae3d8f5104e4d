#pragma once

// Job documents are line based, with sections:
//
//   [ring]         one ring term, e.g. cyclic(4), matrix(cyclic(2),2)
//   [modules]      name = module term       (`regular` is predefined)
//   [preradicals]  name = preradical term
//   [checks]       check-name arg arg ...
//   [universe]     depth = N
//   [output]       format = text | structured
//
// Terms are identifiers, numbers, calls f(a, b), lists [a, b], keyed
// arguments k=v and submodule references k@M. `#` starts a comment.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modlab/errors.hpp"

namespace modlab::cli {

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct Term {
  enum class Kind { ident, number, call, list, at, keyed };
  Kind kind = Kind::ident;
  std::string text;
  std::vector<Term> args;
  std::size_t line = 0;
  std::size_t column = 0;

  bool is_ident(const std::string& s) const { return kind == Kind::ident && text == s; }
  /// Structural equality; positions are ignored.
  bool operator==(const Term& o) const { return kind == o.kind && text == o.text && args == o.args; }
};

inline std::string to_string(const Term& t) {
  auto join = [](const std::vector<Term>& ts) {
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + to_string(ts[i]);
    return s;
  };
  switch (t.kind) {
  case Term::Kind::ident:
  case Term::Kind::number: return t.text;
  case Term::Kind::call: return t.text + "(" + join(t.args) + ")";
  case Term::Kind::list: return "[" + join(t.args) + "]";
  case Term::Kind::at: return to_string(t.args[0]) + "@" + to_string(t.args[1]);
  case Term::Kind::keyed: return t.text + "=" + to_string(t.args[0]);
  }
  return "?";
}

namespace detail {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind;
  std::string text;
  std::size_t column;
};

inline std::vector<Token> lex(const std::string& s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::number, s.substr(i, j - i), i + 1});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
      out.push_back({Token::Kind::ident, s.substr(i, j - i), i + 1});
      i = j;
    } else if (std::string("()[],=@").find(c) != std::string::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), i + 1});
      ++i;
    } else {
      throw ParseError(line, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", s.size() + 1});
  return out;
}

class TermParser {
public:
  TermParser(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  bool at_end() const { return peek().kind == Token::Kind::end; }
  const Token& peek() const { return toks_[pos_]; }

  bool accept(const char* p) {
    if (peek().kind == Token::Kind::punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(line_, t.column, msg + (t.kind == Token::Kind::end ? " at end of line" : ", found '" + t.text + "'"));
  }

  Term term() {
    Term left = primary();
    if (accept("@")) {
      Term t;
      t.kind = Term::Kind::at;
      t.text = "@";
      t.line = left.line;
      t.column = left.column;
      t.args.push_back(std::move(left));
      t.args.push_back(primary());
      return t;
    }
    return left;
  }

  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::ident) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

private:
  Term primary() {
    const Token& t = peek();
    Term out;
    out.line = line_;
    out.column = t.column;
    if (t.kind == Token::Kind::number) {
      out.kind = Term::Kind::number;
      out.text = t.text;
      ++pos_;
      return out;
    }
    if (t.kind == Token::Kind::ident) {
      out.text = t.text;
      ++pos_;
      if (accept("(")) {
        out.kind = Term::Kind::call;
        if (!accept(")")) {
          do out.args.push_back(argument());
          while (accept(","));
          expect(")");
        }
      }
      return out;
    }
    if (accept("[")) {
      out.kind = Term::Kind::list;
      if (!accept("]")) {
        do out.args.push_back(term());
        while (accept(","));
        expect("]");
      }
      return out;
    }
    fail("expected a term");
  }

  Term argument() {
    if (peek().kind == Token::Kind::ident && pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Token::Kind::punct &&
        toks_[pos_ + 1].text == "=") {
      Term k;
      k.kind = Term::Kind::keyed;
      k.line = line_;
      k.column = peek().column;
      k.text = toks_[pos_].text;
      pos_ += 2;
      k.args.push_back(term());
      return k;
    }
    return term();
  }

  std::vector<Token> toks_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a single term, e.g. a ring given on the command line.
inline Term parse_term(const std::string& text, std::size_t line = 1) {
  detail::TermParser p(detail::lex(text, line), line);
  Term t = p.term();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

struct Binding {
  std::string name;
  Term value;
  bool operator==(const Binding& o) const { return name == o.name && value == o.value; }
};

struct CheckSpec {
  std::string name;
  std::vector<Term> args;
  std::size_t line = 0;
  bool operator==(const CheckSpec& o) const { return name == o.name && args == o.args; }
};

inline std::string to_string(const CheckSpec& c) {
  std::string s = c.name;
  for (const auto& a : c.args) s += " " + to_string(a);
  return s;
}

enum class OutputFormat { text, structured };

struct JobSpec {
  std::optional<Term> ring;
  std::vector<Binding> modules;
  std::vector<Binding> preradicals;
  std::vector<CheckSpec> checks;
  std::size_t universe_depth = 2;
  OutputFormat format = OutputFormat::text;
  bool operator==(const JobSpec&) const = default;
};

/// Syntax only: sections, bindings and check lines. Name resolution happens in
/// Workspace.
inline JobSpec parse_job_syntax(const std::string& document) {
  JobSpec spec;
  std::istringstream in(document);
  std::string raw;
  std::string section;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = detail::lex(raw, line);
    if (toks.front().kind == detail::Token::Kind::end) continue;
    detail::TermParser p(toks, line);
    if (p.accept("[")) {
      section = p.ident("a section name");
      p.expect("]");
      if (!p.at_end()) p.fail("unexpected text after section header");
      static const std::vector<std::string> known{"ring", "modules", "preradicals", "checks", "universe", "output"};
      if (std::find(known.begin(), known.end(), section) == known.end())
        throw ParseError(line, toks[1].column, "unknown section '" + section + "'");
      continue;
    }
    if (section.empty()) throw ParseError(line, toks.front().column, "content before the first section header");
    if (section == "ring") {
      if (spec.ring) throw ParseError(line, toks.front().column, "ring already declared");
      spec.ring = p.term();
      if (!p.at_end()) p.fail("unexpected trailing input");
    } else if (section == "modules" || section == "preradicals") {
      Binding b;
      b.name = p.ident("a name");
      p.expect("=");
      b.value = p.term();
      if (!p.at_end()) p.fail("unexpected trailing input");
      (section == "modules" ? spec.modules : spec.preradicals).push_back(std::move(b));
    } else if (section == "checks") {
      CheckSpec c;
      c.line = line;
      c.name = p.ident("a check name");
      while (!p.at_end()) c.args.push_back(p.term());
      spec.checks.push_back(std::move(c));
    } else {
      const std::size_t col = toks.front().column;
      auto key = p.ident("a key");
      p.expect("=");
      if (section == "universe" && key == "depth") {
        if (p.peek().kind != detail::Token::Kind::number) p.fail("expected a number");
        spec.universe_depth = std::stoul(p.peek().text);
        p.term();
      } else if (section == "output" && key == "format") {
        auto v = p.ident("text or structured");
        if (v == "text") spec.format = OutputFormat::text;
        else if (v == "structured") spec.format = OutputFormat::structured;
        else throw ParseError(line, col, "unknown format '" + v + "'");
      } else {
        throw ParseError(line, col, "unknown key '" + key + "' in [" + section + "]");
      }
      if (!p.at_end()) p.fail("unexpected trailing input");
    }
  }
  if (!spec.ring) throw ParseError(line + 1, 1, "missing [ring] section");
  return spec;
}

/// Canonical form; parse_job_syntax(print_job(s)) == s.
inline std::string print_job(const JobSpec& s) {
  std::string out = "[ring]\n" + to_string(*s.ring) + "\n";
  out += "\n[modules]\n";
  for (const auto& b : s.modules) out += b.name + " = " + to_string(b.value) + "\n";
  out += "\n[preradicals]\n";
  for (const auto& b : s.preradicals) out += b.name + " = " + to_string(b.value) + "\n";
  out += "\n[checks]\n";
  for (const auto& c : s.checks) out += to_string(c) + "\n";
  out += "\n[universe]\ndepth = " + std::to_string(s.universe_depth) + "\n";
  out += "\n[output]\nformat = ";
  out += s.format == OutputFormat::text ? "text" : "structured";
  return out + "\n";
}

} // namespace modlab::cli
