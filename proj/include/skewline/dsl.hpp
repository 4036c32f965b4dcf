#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewline/line_algebra.hpp"

namespace skewline::dsl {

// Position in the script text (1-based line and column). Spans take no part
// in AST equality so a pretty-printed script parses back to an equal tree.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;

  friend bool operator==(const Span&, const Span&) { return true; }
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  Span span;
  std::string message;
  std::string expected;  // empty when not a syntax error
  std::string found;

  // "3:7: error: message (expected X, found Y)"
  std::string to_string() const;
};

struct Ident {
  std::string name;
  Span span;
  friend bool operator==(const Ident&, const Ident&) = default;
};

// Scalar literal kept as written (parentheses stripped); parsed against the
// model when the script is checked.
struct ScalarLit {
  std::string text;
  Span span;
  friend bool operator==(const ScalarLit&, const ScalarLit&) = default;
};

struct PointDecl {
  Ident name;
  ScalarLit x, y;
  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

struct LineJoin {
  Ident name;
  Ident p, q;
  friend bool operator==(const LineJoin&, const LineJoin&) = default;
};

// line l : x = c   |   line l : y = m*x + b
struct LineForm {
  Ident name;
  bool vertical = false;
  ScalarLit first;   // c or m
  ScalarLit second;  // b (sloped only)
  friend bool operator==(const LineForm&, const LineForm&) = default;
};

struct FrameDecl {
  Ident name;
  Ident line, origin, unit;
  friend bool operator==(const FrameDecl&, const FrameDecl&) = default;
};

enum class ConstructOp { Add, Mul, Neg, Inv };

struct Construct {
  ConstructOp op = ConstructOp::Add;
  Ident result;
  Ident a;
  std::optional<Ident> c;  // second operand for add and mul
  Side side = Side::Right;  // inv only
  Ident frame;
  std::optional<Ident> auxiliary;  // `using B`
  friend bool operator==(const Construct&, const Construct&) = default;
};

struct Project {
  Ident result;
  Ident point;
  Ident direction;
  Ident onto;
  friend bool operator==(const Project&, const Project&) = default;
};

enum class Predicate { Between, Collinear, Parallel, Eq, Sign };

struct Assert {
  Predicate predicate = Predicate::Eq;
  std::vector<Ident> args;
  char sign = '+';  // sign only: '+', '-' or '0'
  std::optional<Ident> frame;
  friend bool operator==(const Assert&, const Assert&) = default;
};

using StatementBody = std::variant<PointDecl, LineJoin, LineForm, FrameDecl, Construct, Project, Assert>;

struct Statement {
  StatementBody body;
  Span span;
  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Header {
  std::string model;  // as written: rational | gf(p) | quaternion
  Span span;
  friend bool operator==(const Header&, const Header&) = default;
};

struct Script {
  Header header;
  RingDescriptor ring = RingDescriptor::rational();
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

struct ParseResult {
  std::optional<Script> script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return script.has_value(); }
};

// Syntax, scalar, name-resolution and kind checks. Never throws on malformed
// input; any error leaves `script` empty.
ParseResult parse(std::string_view text);

// Canonical text: one statement per line, scalars parenthesized in line forms.
std::string pretty_print(const Script& script);

using Value = std::variant<Point, Line, Frame>;

struct AssertionOutcome {
  Span span;
  std::string text;  // the assertion as pretty-printed
  bool passed = false;
  std::string detail;
};

struct RunResult {
  std::map<std::string, Value> bindings;
  std::vector<ConstructionTrace> traces;
  std::vector<AssertionOutcome> assertions;
  std::vector<Diagnostic> diagnostics;  // runtime construction errors

  bool ok() const;
};

// Deterministic for a fixed (script, seed); the seed picks the default
// auxiliary point of constructions without `using`. A failing statement is
// reported and execution continues with the next one.
RunResult execute(const Script& script, std::uint64_t seed = 0);

std::string statement_text(const Statement& s);

}  // namespace skewline::dsl
