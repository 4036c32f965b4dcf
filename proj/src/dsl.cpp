#include "skewline/dsl.hpp"

#include <cctype>
#include <sstream>

#include "skewline/ordering.hpp"

namespace skewline::dsl {

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  out << span.line << ':' << span.column << ": " << (severity == Severity::Error ? "error" : "warning") << ": "
      << message;
  if (!expected.empty()) out << " (expected " << expected << ", found " << found << ')';
  return out.str();
}

namespace {

// ------------------------------------------------------------------ lexing

enum class TokKind { Ident, Number, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  Span span;

  std::string describe() const {
    switch (kind) {
      case TokKind::End: return "end of input";
      case TokKind::Number: return "number '" + text + "'";
      case TokKind::Ident: return "'" + text + "'";
      case TokKind::Punct: return "'" + text + "'";
    }
    return text;
  }
};

struct Cursor {
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

struct SyntaxError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run();

 private:
  // -- character level
  char at(std::size_t p) const { return p < text_.size() ? text_[p] : '\0'; }

  void advance(Cursor& c, std::size_t n = 1) const {
    for (std::size_t k = 0; k < n && c.pos < text_.size(); ++k) {
      if (text_[c.pos] == '\n') {
        ++c.line;
        c.column = 1;
      } else {
        ++c.column;
      }
      ++c.pos;
    }
  }

  void skip_blank(Cursor& c) const {
    for (;;) {
      const char ch = at(c.pos);
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance(c);
      } else if (ch == '#') {
        while (c.pos < text_.size() && at(c.pos) != '\n') advance(c);
      } else {
        return;
      }
    }
  }

  Span span_at(const Cursor& c, std::size_t length) const { return {c.line, c.column, c.pos, length}; }

  Token lex(Cursor& c) const {
    skip_blank(c);
    Token t;
    if (c.pos >= text_.size()) {
      t.span = span_at(c, 0);
      return t;
    }
    const Cursor start = c;
    const char ch = at(c.pos);
    if (ident_start(ch)) {
      std::size_t n = 0;
      while (ident_char(at(c.pos + n))) ++n;
      t.kind = TokKind::Ident;
      t.text = std::string(text_.substr(c.pos, n));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(at(c.pos + n)))) ++n;
      t.kind = TokKind::Number;
      t.text = std::string(text_.substr(c.pos, n));
    } else if (ch == '^' && text_.substr(c.pos, 3) == "^-1") {
      t.kind = TokKind::Punct;
      t.text = "^-1";
    } else {
      t.kind = TokKind::Punct;
      t.text = std::string(1, ch);
    }
    advance(c, t.text.size());
    t.span = span_at(start, t.text.size());
    return t;
  }

  Token peek() const {
    Cursor c = cur_;
    return lex(c);
  }
  Token take() { return lex(cur_); }

  [[noreturn]] void expected(const std::string& what, const Token& found) const {
    throw SyntaxError{{Severity::Error, found.span, "unexpected " + found.describe(), what, found.describe()}};
  }

  Token expect_punct(const char* p) {
    Token t = take();
    if (t.kind != TokKind::Punct || t.text != p) expected(std::string("'") + p + "'", t);
    return t;
  }
  Token expect_keyword(const char* kw) {
    Token t = take();
    if (t.kind != TokKind::Ident || t.text != kw) expected(std::string("'") + kw + "'", t);
    return t;
  }
  Ident expect_ident(const char* role) {
    Token t = take();
    if (t.kind != TokKind::Ident || is_keyword(t.text)) expected(role, t);
    return {t.text, t.span};
  }

  static bool is_keyword(const std::string& s) {
    static const char* kws[] = {"model", "point", "line", "frame", "add", "mul", "neg", "inv", "project",
                                "assert", "in",    "using", "via",  "onto", "left", "right"};
    for (const char* k : kws) {
      if (s == k) return true;
    }
    return false;
  }

  static std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
  }

  // Drops parentheses enclosing the whole literal.
  static std::string unwrap(std::string s) {
    for (;;) {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
      int depth = 0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')') --depth;
        if (depth == 0 && k + 1 < s.size()) return s;
      }
      s = trim(std::string_view(s).substr(1, s.size() - 2));
    }
  }

  // Raw scalar text up to a depth-0 character from `stops` (not consumed),
  // a newline or a comment.
  ScalarLit raw_scalar(std::string_view stops, const char* role) {
    Cursor c = cur_;
    while (at(c.pos) == ' ' || at(c.pos) == '\t') advance(c);
    const Cursor start = c;
    int depth = 0;
    while (c.pos < text_.size()) {
      const char ch = at(c.pos);
      if (ch == '\n' || ch == '#') break;
      if (depth == 0 && stops.find(ch) != std::string_view::npos) break;
      if (ch == '(') ++depth;
      if (ch == ')') {
        if (depth == 0) break;
        --depth;
      }
      advance(c);
    }
    const std::string raw = trim(text_.substr(start.pos, c.pos - start.pos));
    if (raw.empty()) {
      Token t = lex(c = start);
      expected(role, t);
    }
    cur_ = c;
    return {unwrap(raw), span_at(start, c.pos - start.pos)};
  }

  // Parenthesized literal, or a bare one that ends before '*', '+', ')' or
  // the end of the line.
  ScalarLit line_scalar(const char* role) {
    Token t = peek();
    if (t.kind == TokKind::Punct && t.text == "(") {
      take();
      ScalarLit lit = raw_scalar(")", role);
      expect_punct(")");
      return lit;
    }
    return raw_scalar("*+)", role);
  }

  // -- grammar
  Header header();
  Statement statement();
  StatementBody point_decl();
  StatementBody line_decl();
  StatementBody frame_decl();
  StatementBody construct(ConstructOp op);
  StatementBody project_stmt();
  StatementBody assert_stmt();

  std::string_view text_;
  Cursor cur_;
  std::vector<Diagnostic> diags_;
  std::optional<RingDescriptor> ring_;
};

Header Parser::header() {
  Token kw = peek();
  if (kw.kind != TokKind::Ident || kw.text != "model") expected("'model' header", kw);
  take();
  Token m = take();
  if (m.kind != TokKind::Ident) expected("'rational', 'gf' or 'quaternion'", m);
  Header h{m.text, m.span};
  if (m.text == "rational") {
    ring_ = RingDescriptor::rational();
  } else if (m.text == "quaternion") {
    ring_ = RingDescriptor::quaternion();
  } else if (m.text == "gf") {
    expect_punct("(");
    Token n = take();
    if (n.kind != TokKind::Number) expected("a prime modulus", n);
    expect_punct(")");
    h.model = "gf(" + n.text + ")";
    std::uint64_t p = 0;
    if (n.text.size() > 9 || (p = std::stoull(n.text), !is_prime(p))) {
      diags_.push_back({Severity::Error, n.span, n.text + " is not prime", "", ""});
    } else {
      ring_ = RingDescriptor::prime_field(static_cast<std::uint32_t>(p));
      h.model = ring_->name();
    }
  } else {
    expected("'rational', 'gf' or 'quaternion'", m);
  }
  return h;
}

StatementBody Parser::point_decl() {
  PointDecl d;
  d.name = expect_ident("a point name");
  expect_punct("=");
  expect_punct("(");
  d.x = raw_scalar(",", "an x coordinate");
  expect_punct(",");
  d.y = raw_scalar(")", "a y coordinate");
  expect_punct(")");
  return d;
}

StatementBody Parser::line_decl() {
  Ident name = expect_ident("a line name");
  Token t = take();
  if (t.kind == TokKind::Punct && t.text == "=") {
    LineJoin j{name, expect_ident("a point name"), {}};
    j.q = expect_ident("a point name");
    return j;
  }
  if (t.kind != TokKind::Punct || t.text != ":") expected("'=' or ':'", t);
  LineForm f;
  f.name = name;
  Token axis = take();
  if (axis.kind == TokKind::Ident && axis.text == "x") {
    expect_punct("=");
    f.vertical = true;
    f.first = line_scalar("an abscissa");
    return f;
  }
  if (axis.kind != TokKind::Ident || axis.text != "y") expected("'x' or 'y'", axis);
  expect_punct("=");
  f.first = line_scalar("a slope");
  expect_punct("*");
  expect_keyword("x");
  Token plus = peek();
  if (plus.kind == TokKind::Punct && plus.text == "+") {
    take();
    f.second = line_scalar("an intercept");
  } else {
    f.second = {"0", plus.span};
  }
  return f;
}

StatementBody Parser::frame_decl() {
  FrameDecl f;
  f.name = expect_ident("a frame name");
  expect_punct("=");
  f.line = expect_ident("a line name");
  f.origin = expect_ident("the point O");
  f.unit = expect_ident("the point I");
  return f;
}

StatementBody Parser::construct(ConstructOp op) {
  Construct c;
  c.op = op;
  c.result = expect_ident("a result name");
  expect_punct("=");
  if (op == ConstructOp::Neg) expect_punct("-");
  c.a = expect_ident("an operand");
  if (op == ConstructOp::Add || op == ConstructOp::Mul) {
    expect_punct(op == ConstructOp::Add ? "+" : "*");
    c.c = expect_ident("an operand");
  }
  if (op == ConstructOp::Inv) {
    expect_punct("^-1");
    Token side = take();
    if (side.kind != TokKind::Ident || (side.text != "left" && side.text != "right")) {
      expected("'left' or 'right'", side);
    }
    c.side = side.text == "left" ? Side::Left : Side::Right;
  }
  expect_keyword("in");
  c.frame = expect_ident("a frame name");
  Token u = peek();
  if (u.kind == TokKind::Ident && u.text == "using") {
    take();
    c.auxiliary = expect_ident("an auxiliary point");
  }
  return c;
}

StatementBody Parser::project_stmt() {
  Project p;
  p.result = expect_ident("a result name");
  expect_punct("=");
  p.point = expect_ident("a point name");
  expect_keyword("via");
  p.direction = expect_ident("a direction line");
  expect_keyword("onto");
  p.onto = expect_ident("a target line");
  return p;
}

StatementBody Parser::assert_stmt() {
  Assert a;
  Token pred = take();
  auto idents = [&](int n) {
    for (int k = 0; k < n; ++k) a.args.push_back(expect_ident("a name"));
  };
  if (pred.kind != TokKind::Ident) expected("a predicate", pred);
  if (pred.text == "between") {
    a.predicate = Predicate::Between;
    idents(3);
  } else if (pred.text == "collinear") {
    a.predicate = Predicate::Collinear;
    idents(3);
  } else if (pred.text == "parallel") {
    a.predicate = Predicate::Parallel;
    idents(2);
  } else if (pred.text == "eq") {
    a.predicate = Predicate::Eq;
    idents(2);
  } else if (pred.text == "sign") {
    a.predicate = Predicate::Sign;
    idents(1);
    Token s = take();
    if (s.text == "+" || s.text == "-" || (s.kind == TokKind::Number && s.text == "0")) {
      a.sign = s.text[0];
    } else {
      expected("'+', '-' or '0'", s);
    }
    expect_keyword("in");
    a.frame = expect_ident("a frame name");
  } else {
    expected("'between', 'collinear', 'parallel', 'eq' or 'sign'", pred);
  }
  return a;
}

Statement Parser::statement() {
  Token kw = take();
  Statement s;
  if (kw.kind != TokKind::Ident) expected("a statement", kw);
  if (kw.text == "point") {
    s.body = point_decl();
  } else if (kw.text == "line") {
    s.body = line_decl();
  } else if (kw.text == "frame") {
    s.body = frame_decl();
  } else if (kw.text == "add") {
    s.body = construct(ConstructOp::Add);
  } else if (kw.text == "mul") {
    s.body = construct(ConstructOp::Mul);
  } else if (kw.text == "neg") {
    s.body = construct(ConstructOp::Neg);
  } else if (kw.text == "inv") {
    s.body = construct(ConstructOp::Inv);
  } else if (kw.text == "project") {
    s.body = project_stmt();
  } else if (kw.text == "assert") {
    s.body = assert_stmt();
  } else {
    expected("a statement", kw);
  }
  s.span = {kw.span.line, kw.span.column, kw.span.offset, cur_.pos - kw.span.offset};
  return s;
}

// ------------------------------------------------------------ name checking

enum class Kind { Point, Line, Frame };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Point: return "point";
    case Kind::Line: return "line";
    case Kind::Frame: return "frame";
  }
  return "?";
}

class Checker {
 public:
  Checker(std::optional<RingDescriptor> ring, std::vector<Diagnostic>& diags) : ring_(ring), diags_(diags) {}

  void check(const Statement& s) {
    std::visit([&](const auto& body) { visit(body); }, s.body);
  }

 private:
  struct Entry {
    Kind kind;
    Span span;
  };

  void error(const Span& span, std::string message) {
    diags_.push_back({Severity::Error, span, std::move(message), "", ""});
  }

  void use(const Ident& id, Kind want) {
    auto it = env_.find(id.name);
    if (it == env_.end()) {
      error(id.span, std::string("undeclared ") + kind_name(want) + " '" + id.name + "'");
    } else if (it->second.kind != want) {
      diags_.push_back({Severity::Error, id.span,
                        "'" + id.name + "' is a " + kind_name(it->second.kind) + ", expected a " + kind_name(want),
                        kind_name(want), kind_name(it->second.kind)});
    }
  }

  std::optional<Kind> use_any(const Ident& id) {
    auto it = env_.find(id.name);
    if (it == env_.end()) {
      error(id.span, "undeclared name '" + id.name + "'");
      return std::nullopt;
    }
    return it->second.kind;
  }

  void declare(const Ident& id, Kind kind) {
    auto [it, fresh] = env_.emplace(id.name, Entry{kind, id.span});
    if (!fresh) {
      error(id.span, "'" + id.name + "' is already declared at " + std::to_string(it->second.span.line) + ":" +
                         std::to_string(it->second.span.column));
    }
  }

  void scalar(const ScalarLit& lit) {
    if (!ring_) return;
    try {
      Scalar::parse(*ring_, lit.text);
    } catch (const GeometryError& e) {
      error(lit.span, "bad scalar '" + lit.text + "' for " + ring_->name() + ": " + e.detail());
    }
  }

  void visit(const PointDecl& d) {
    scalar(d.x);
    scalar(d.y);
    declare(d.name, Kind::Point);
  }
  void visit(const LineJoin& j) {
    use(j.p, Kind::Point);
    use(j.q, Kind::Point);
    declare(j.name, Kind::Line);
  }
  void visit(const LineForm& f) {
    scalar(f.first);
    if (!f.vertical) scalar(f.second);
    declare(f.name, Kind::Line);
  }
  void visit(const FrameDecl& f) {
    use(f.line, Kind::Line);
    use(f.origin, Kind::Point);
    use(f.unit, Kind::Point);
    declare(f.name, Kind::Frame);
  }
  void visit(const Construct& c) {
    use(c.a, Kind::Point);
    if (c.c) use(*c.c, Kind::Point);
    use(c.frame, Kind::Frame);
    if (c.auxiliary) use(*c.auxiliary, Kind::Point);
    declare(c.result, Kind::Point);
  }
  void visit(const Project& p) {
    use(p.point, Kind::Point);
    use(p.direction, Kind::Line);
    use(p.onto, Kind::Line);
    declare(p.result, Kind::Point);
  }
  void visit(const Assert& a) {
    switch (a.predicate) {
      case Predicate::Between:
      case Predicate::Collinear:
        for (const auto& id : a.args) use(id, Kind::Point);
        break;
      case Predicate::Parallel:
        for (const auto& id : a.args) use(id, Kind::Line);
        break;
      case Predicate::Eq: {
        auto k1 = use_any(a.args[0]);
        auto k2 = use_any(a.args[1]);
        if (k1 && k2 && *k1 != *k2) {
          diags_.push_back({Severity::Error, a.args[1].span,
                            "cannot compare a " + std::string(kind_name(*k1)) + " with a " + kind_name(*k2),
                            kind_name(*k1), kind_name(*k2)});
        }
        break;
      }
      case Predicate::Sign:
        use(a.args[0], Kind::Point);
        use(*a.frame, Kind::Frame);
        break;
    }
  }

  std::optional<RingDescriptor> ring_;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, Entry> env_;
};

ParseResult Parser::run() {
  Script script;
  try {
    script.header = header();
  } catch (const SyntaxError& e) {
    diags_.push_back(e.diag);
    return {std::nullopt, diags_};
  }
  while (peek().kind != TokKind::End) {
    try {
      script.statements.push_back(statement());
    } catch (const SyntaxError& e) {
      diags_.push_back(e.diag);
      // resume at the first token on a later line
      const std::size_t line = e.diag.span.line;
      while (peek().kind != TokKind::End && peek().span.line <= line) take();
    }
  }
  Checker checker(ring_, diags_);
  for (const auto& s : script.statements) checker.check(s);
  if (!diags_.empty() || !ring_) return {std::nullopt, diags_};
  script.ring = *ring_;
  return {std::move(script), {}};
}

// ---------------------------------------------------------------- printing

std::string print(const PointDecl& d) {
  return "point " + d.name.name + " = (" + d.x.text + ", " + d.y.text + ")";
}
std::string print(const LineJoin& j) { return "line " + j.name.name + " = " + j.p.name + " " + j.q.name; }
std::string print(const LineForm& f) {
  if (f.vertical) return "line " + f.name.name + " : x = (" + f.first.text + ")";
  return "line " + f.name.name + " : y = (" + f.first.text + ")*x + (" + f.second.text + ")";
}
std::string print(const FrameDecl& f) {
  return "frame " + f.name.name + " = " + f.line.name + " " + f.origin.name + " " + f.unit.name;
}
std::string print(const Construct& c) {
  std::string s;
  switch (c.op) {
    case ConstructOp::Add: s = "add " + c.result.name + " = " + c.a.name + " + " + c.c->name; break;
    case ConstructOp::Mul: s = "mul " + c.result.name + " = " + c.a.name + " * " + c.c->name; break;
    case ConstructOp::Neg: s = "neg " + c.result.name + " = -" + c.a.name; break;
    case ConstructOp::Inv:
      s = "inv " + c.result.name + " = " + c.a.name + "^-1 " + (c.side == Side::Left ? "left" : "right");
      break;
  }
  s += " in " + c.frame.name;
  if (c.auxiliary) s += " using " + c.auxiliary->name;
  return s;
}
std::string print(const Project& p) {
  return "project " + p.result.name + " = " + p.point.name + " via " + p.direction.name + " onto " + p.onto.name;
}
std::string print(const Assert& a) {
  static const char* names[] = {"between", "collinear", "parallel", "eq", "sign"};
  std::string s = std::string("assert ") + names[static_cast<int>(a.predicate)];
  for (const auto& id : a.args) s += " " + id.name;
  if (a.predicate == Predicate::Sign) s += std::string(" ") + a.sign + " in " + a.frame->name;
  return s;
}

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

std::string statement_text(const Statement& s) {
  return std::visit([](const auto& body) { return print(body); }, s.body);
}

std::string pretty_print(const Script& script) {
  std::string out = "model " + script.header.model + "\n";
  for (const auto& s : script.statements) out += statement_text(s) + "\n";
  return out;
}

// --------------------------------------------------------------- execution

bool RunResult::ok() const {
  if (!diagnostics.empty()) return false;
  for (const auto& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

namespace {

struct Unavailable {
  std::string name;
  Span span;
};

class Executor {
 public:
  Executor(const Script& script, std::uint64_t seed) : ring_(script.ring), seed_(seed) {}

  void run(const Statement& s) {
    try {
      std::visit([&](const auto& body) { exec(s, body); }, s.body);
    } catch (const Unavailable& u) {
      result.diagnostics.push_back(
          {Severity::Error, u.span, "'" + u.name + "' is unavailable after an earlier failure", "", ""});
    } catch (const GeometryError& e) {
      result.diagnostics.push_back({Severity::Error, s.span,
                                    statement_text(s) + ": " + std::string(error_kind_name(e.kind())) + ": " +
                                        e.detail(),
                                    "", ""});
    }
  }

  RunResult result;

 private:
  template <class T>
  const T& get(const Ident& id) {
    auto it = result.bindings.find(id.name);
    if (it == result.bindings.end()) throw Unavailable{id.name, id.span};
    return std::get<T>(it->second);
  }
  const Value& get_any(const Ident& id) {
    auto it = result.bindings.find(id.name);
    if (it == result.bindings.end()) throw Unavailable{id.name, id.span};
    return it->second;
  }

  ConstructionTrace blank_trace() const {
    const Point origin{Scalar::zero(ring_), Scalar::zero(ring_)};
    return ConstructionTrace{"", std::nullopt, {}, std::nullopt, {}, origin};
  }

  Scalar scalar(const ScalarLit& lit) const { return Scalar::parse(ring_, lit.text); }
  void bind(const Ident& id, Value v) { result.bindings.insert_or_assign(id.name, std::move(v)); }

  void exec(const Statement&, const PointDecl& d) { bind(d.name, Point{scalar(d.x), scalar(d.y)}); }
  void exec(const Statement&, const LineJoin& j) { bind(j.name, line_through(get<Point>(j.p), get<Point>(j.q))); }
  void exec(const Statement&, const LineForm& f) {
    bind(f.name, f.vertical ? Line::vertical(scalar(f.first)) : Line::sloped(scalar(f.first), scalar(f.second)));
  }
  void exec(const Statement&, const FrameDecl& f) {
    bind(f.name, Frame(get<Line>(f.line), get<Point>(f.origin), get<Point>(f.unit)));
  }
  void exec(const Statement&, const Construct& c) {
    const Frame& frame = get<Frame>(c.frame);
    const Point b = c.auxiliary ? get<Point>(*c.auxiliary) : choose_auxiliary(frame, seed_);
    ConstructionTrace trace = blank_trace();
    Point out = [&] {
      switch (c.op) {
        case ConstructOp::Add: return point_add(frame, get<Point>(c.a), get<Point>(*c.c), b, &trace);
        case ConstructOp::Mul: return point_mul(frame, get<Point>(c.a), get<Point>(*c.c), b, &trace);
        case ConstructOp::Neg: return point_neg(frame, get<Point>(c.a), b, &trace);
        case ConstructOp::Inv: return point_inv(frame, get<Point>(c.a), c.side, b, &trace);
      }
      throw GeometryError(ErrorKind::InvalidTrace, "unknown construction");
    }();
    bind(c.result, out);
    result.traces.push_back(std::move(trace));
  }
  void exec(const Statement&, const Project& p) {
    const Point& a = get<Point>(p.point);
    const Line& dir = get<Line>(p.direction);
    const Line& onto = get<Line>(p.onto);
    // The source is the parallel to the target through the point, so the
    // projection exists exactly when the direction is not parallel to onto.
    const ParallelProjection pp(parallel_through(a, onto), onto, dir);
    ConstructionTrace trace = blank_trace();
    bind(p.result, project_traced(pp, a, &trace));
    result.traces.push_back(std::move(trace));
  }
  void exec(const Statement& s, const Assert& a) {
    AssertionOutcome out{s.span, statement_text(s), false, ""};
    try {
      evaluate(a, out);
    } catch (const GeometryError& e) {
      out.passed = false;
      out.detail = std::string(error_kind_name(e.kind())) + ": " + e.detail();
    }
    result.assertions.push_back(std::move(out));
  }

  void evaluate(const Assert& a, AssertionOutcome& out) {
    switch (a.predicate) {
      case Predicate::Between: {
        const Point &x = get<Point>(a.args[0]), &y = get<Point>(a.args[1]), &z = get<Point>(a.args[2]);
        if (x == z || !collinear(x, y, z)) {
          out.detail = "points are not distinct and collinear";
          return;
        }
        out.passed = between(line_through(x, z), x, y, z);
        if (!out.passed) out.detail = y.to_string() + " is not between " + x.to_string() + " and " + z.to_string();
        return;
      }
      case Predicate::Collinear:
        out.passed = collinear(get<Point>(a.args[0]), get<Point>(a.args[1]), get<Point>(a.args[2]));
        if (!out.passed) out.detail = "points are not collinear";
        return;
      case Predicate::Parallel:
        out.passed = parallel(get<Line>(a.args[0]), get<Line>(a.args[1]));
        if (!out.passed) out.detail = "lines meet";
        return;
      case Predicate::Eq: {
        const Value& v1 = get_any(a.args[0]);
        const Value& v2 = get_any(a.args[1]);
        out.passed = v1 == v2;
        if (!out.passed) out.detail = describe(v1) + " != " + describe(v2);
        return;
      }
      case Predicate::Sign: {
        const SignClass want = a.sign == '+' ? SignClass::Positive
                               : a.sign == '-' ? SignClass::Negative
                                               : SignClass::Zero;
        const SignClass got = sign_classify(get<Frame>(*a.frame), get<Point>(a.args[0]));
        out.passed = got == want;
        if (!out.passed) out.detail = "sign is " + std::string(sign_class_name(got));
        return;
      }
    }
  }

  static std::string describe(const Value& v) {
    if (const auto* p = std::get_if<Point>(&v)) return p->to_string();
    if (const auto* l = std::get_if<Line>(&v)) return l->to_string();
    const auto& f = std::get<Frame>(v);
    return "frame on " + f.line().to_string();
  }

  RingDescriptor ring_;
  std::uint64_t seed_;
};

}  // namespace

RunResult execute(const Script& script, std::uint64_t seed) {
  Executor ex(script, seed);
  for (const auto& s : script.statements) ex.run(s);
  return std::move(ex.result);
}

}  // namespace skewline::dsl
