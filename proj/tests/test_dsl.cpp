#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "skewline/dsl.hpp"
#include "skewline/sampling.hpp"

using namespace skewline;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string script_path(const char* name) { return std::string(SKEWLINE_SOURCE_DIR) + "/scripts/" + name; }

std::vector<std::string> messages(const std::vector<dsl::Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.to_string());
  return out;
}

bool any_contains(const std::vector<dsl::Diagnostic>& ds, const std::string& needle) {
  for (const auto& d : ds) {
    if (d.to_string().find(needle) != std::string::npos) return true;
  }
  return false;
}

const Point& point(const dsl::RunResult& r, const std::string& name) { return std::get<Point>(r.bindings.at(name)); }

// Random well-formed scripts: names are declared before use and each
// reference has the right kind. Spacing and comments vary.
class ScriptGen {
 public:
  explicit ScriptGen(std::uint64_t seed) : rng_(seed) {}

  std::string make() {
    static const char* models[] = {"rational", "gf(2)", "gf(3)", "gf(7)", "gf(13)", "quaternion"};
    const std::string model = models[pick(6)];
    const RingDescriptor ring = RingDescriptor::parse(model);
    Sampler s(ring, rng_());
    points_.clear();
    lines_.clear();
    frames_.clear();
    std::string out = (pick(5) == 0 ? "# header\n" : "") + std::string("model") + gap() + model + "\n";
    const int n = 3 + pick(25);
    for (int k = 0; k < n; ++k) {
      out += statement(s) + comment() + "\n";
      if (pick(4) == 0) out += "\n";
    }
    return out;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string gap() { return pick(3) == 0 ? "   " : " "; }
  std::string comment() { return pick(5) == 0 ? "  # note " + std::to_string(pick(100)) : ""; }
  std::string fresh(char prefix) { return std::string(1, prefix) + std::to_string(counter_++); }
  const std::string& any(const std::vector<std::string>& v) { return v[pick(static_cast<int>(v.size()))]; }

  std::string scalar(Sampler& s) {
    const std::string text = s.scalar().to_string();
    return pick(3) == 0 ? "(" + text + ")" : text;
  }
  // y = m*x + b needs parentheses around literals containing + or *
  std::string coefficient(Sampler& s) {
    const std::string text = s.scalar().to_string();
    return s.ring().commutative() && pick(3) != 0 ? text : "(" + text + ")";
  }

  std::string statement(Sampler& s) {
    for (;;) {
      switch (pick(8)) {
        case 0: {
          const std::string name = fresh('P');
          points_.push_back(name);
          return "point " + name + gap() + "=" + gap() + "(" + scalar(s) + "," + gap() + scalar(s) + ")";
        }
        case 1: {
          if (points_.size() < 2) continue;
          const std::string name = fresh('l');
          lines_.push_back(name);
          return "line " + name + " = " + any(points_) + " " + any(points_);
        }
        case 2: {
          const std::string name = fresh('l');
          lines_.push_back(name);
          if (pick(2) == 0) return "line " + name + " : x = " + coefficient(s);
          if (pick(3) == 0) return "line " + name + " : y = " + coefficient(s) + "*x";
          return "line " + name + " : y = " + coefficient(s) + "*x + " + coefficient(s);
        }
        case 3: {
          if (lines_.empty() || points_.empty()) continue;
          const std::string name = fresh('f');
          frames_.push_back(name);
          return "frame " + name + " = " + any(lines_) + " " + any(points_) + " " + any(points_);
        }
        case 4: {
          if (frames_.empty() || points_.empty()) continue;
          static const char* ops[] = {"add", "mul", "neg", "inv"};
          const int op = pick(4);
          const std::string result = fresh('R');
          std::string text = std::string(ops[op]) + " " + result + " = ";
          if (op == 0) text += any(points_) + " + " + any(points_);
          if (op == 1) text += any(points_) + " * " + any(points_);
          if (op == 2) text += "-" + any(points_);
          if (op == 3) text += any(points_) + "^-1 " + (pick(2) ? "left" : "right");
          text += " in " + any(frames_);
          if (pick(2) == 0) text += " using " + any(points_);
          points_.push_back(result);
          return text;
        }
        case 5: {
          if (points_.empty() || lines_.empty()) continue;
          const std::string result = fresh('R');
          const std::string text = "project " + result + " = " + any(points_) + " via " + any(lines_) + " onto " + any(lines_);
          points_.push_back(result);
          return text;
        }
        case 6: {
          if (points_.empty()) continue;
          switch (pick(4)) {
            case 0: return "assert between " + any(points_) + " " + any(points_) + " " + any(points_);
            case 1: return "assert collinear " + any(points_) + " " + any(points_) + " " + any(points_);
            case 2: return "assert eq " + any(points_) + " " + any(points_);
            default:
              if (frames_.empty()) continue;
              return "assert sign " + any(points_) + " " + "+-0"[pick(3)] + " in " + any(frames_);
          }
        }
        default: {
          if (lines_.empty()) continue;
          return "assert parallel " + any(lines_) + " " + any(lines_);
        }
      }
    }
  }

  std::mt19937_64 rng_;
  int counter_ = 0;
  std::vector<std::string> points_, lines_, frames_;
};

}  // namespace

TEST(Parse, AddScriptGivesOneAddStatement) {
  const auto r = dsl::parse(
      "model gf(5)\npoint O = (0, 0)\npoint I = (1, 0)\npoint A = (2, 0)\npoint C = (4, 0)\n"
      "line l = O I\nframe f = l O I\nadd E = A + C in f\n");
  ASSERT_TRUE(r.ok()) << messages(r.diagnostics).front();
  EXPECT_EQ(r.script->ring, RingDescriptor::prime_field(5));
  int adds = 0;
  for (const auto& s : r.script->statements) {
    if (const auto* c = std::get_if<dsl::Construct>(&s.body)) {
      EXPECT_EQ(c->op, dsl::ConstructOp::Add);
      EXPECT_EQ(c->result.name, "E");
      EXPECT_EQ(c->a.name, "A");
      EXPECT_EQ(c->c->name, "C");
      EXPECT_EQ(c->frame.name, "f");
      EXPECT_FALSE(c->auxiliary.has_value());
      EXPECT_EQ(s.span.line, 8u);
      ++adds;
    }
  }
  EXPECT_EQ(adds, 1);
}

TEST(Parse, NonPrimeModulus) {
  const auto r = dsl::parse("model gf(4)\npoint O = (0, 0)\n");
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics.front().message.find("4 is not prime"), std::string::npos);
  EXPECT_EQ(r.diagnostics.front().span.line, 1u);
}

TEST(Parse, UndeclaredFrame) {
  const auto r = dsl::parse("model rational\npoint A = (1, 0)\npoint C = (2, 0)\nadd E = A + C in g\n");
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].message, "undeclared frame 'g'");
  EXPECT_EQ(r.diagnostics[0].span.line, 4u);
  EXPECT_EQ(r.diagnostics[0].span.column, 18u);
  EXPECT_EQ(r.diagnostics[0].to_string(), "4:18: error: undeclared frame 'g'");
}

TEST(Parse, KindMismatchAndRedeclaration) {
  const auto r = dsl::parse("model rational\npoint A = (1, 0)\npoint A = (2, 0)\nadd E = A + A in A\n");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(any_contains(r.diagnostics, "'A' is already declared at 2:7"));
  EXPECT_TRUE(any_contains(r.diagnostics, "'A' is a point, expected a frame"));
}

TEST(Parse, SyntaxErrorsRecoverAtTheNextLine) {
  const auto r = dsl::parse("model rational\npoint A = 1, 0\npoint B = (1, 2)\nline l : z = 3\nfrobnicate\n");
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 3u) << ::testing::PrintToString(messages(r.diagnostics));
  EXPECT_EQ(r.diagnostics[0].span.line, 2u);
  EXPECT_EQ(r.diagnostics[0].expected, "'('");
  EXPECT_EQ(r.diagnostics[1].span.line, 4u);
  EXPECT_EQ(r.diagnostics[2].span.line, 5u);
  EXPECT_NE(r.diagnostics[2].to_string().find("expected a statement"), std::string::npos);
}

TEST(Parse, BadScalarAndMissingHeader) {
  auto r = dsl::parse("model gf(5)\npoint A = (1/0, 2)\n");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(any_contains(r.diagnostics, "bad scalar '1/0'"));
  r = dsl::parse("point A = (1, 2)\n");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(any_contains(r.diagnostics, "'model' header"));
  r = dsl::parse("model reals\n");
  EXPECT_FALSE(r.ok());
}

TEST(Parse, LineForms) {
  const auto r = dsl::parse("model quaternion\nline a : x = 3\nline b : y = (i+j)*x + (1/2-k)\nline c : y = 2*x\n");
  ASSERT_TRUE(r.ok()) << messages(r.diagnostics).front();
  const auto& a = std::get<dsl::LineForm>(r.script->statements[0].body);
  EXPECT_TRUE(a.vertical);
  EXPECT_EQ(a.first.text, "3");
  const auto& b = std::get<dsl::LineForm>(r.script->statements[1].body);
  EXPECT_EQ(b.first.text, "i+j");
  EXPECT_EQ(b.second.text, "1/2-k");
  const auto& c = std::get<dsl::LineForm>(r.script->statements[2].body);
  EXPECT_EQ(c.second.text, "0");
}

TEST(Parse, NeverThrowsOnGarbage) {
  std::mt19937 rng(1);
  const std::string alphabet = "model gf(5)\npoint=(),;:*+-^#ABxy0123456789/ iljk\t";
  for (int n = 0; n < 500; ++n) {
    std::string text = n % 2 ? "model rational\n" : "";
    const int len = std::uniform_int_distribution<int>(0, 80)(rng);
    for (int k = 0; k < len; ++k) text += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    EXPECT_NO_THROW({
      const auto r = dsl::parse(text);
      if (!r.ok()) EXPECT_FALSE(r.diagnostics.empty());
    });
  }
}

TEST(Parse, PrettyPrintRoundTripProperty) {
  ScriptGen gen(2024);
  for (int n = 0; n < 300; ++n) {
    const std::string text = gen.make();
    const auto first = dsl::parse(text);
    ASSERT_TRUE(first.ok()) << text << "\n" << messages(first.diagnostics).front();
    const std::string printed = dsl::pretty_print(*first.script);
    const auto second = dsl::parse(printed);
    ASSERT_TRUE(second.ok()) << printed << "\n" << messages(second.diagnostics).front();
    EXPECT_EQ(*second.script, *first.script) << text << "\n---\n" << printed;
    EXPECT_EQ(dsl::pretty_print(*second.script), printed);
  }
}

TEST(Execute, AdditionScript) {
  const auto parsed = dsl::parse(read(script_path("addition.geo")));
  ASSERT_TRUE(parsed.ok());
  const auto r = dsl::execute(*parsed.script);
  EXPECT_TRUE(r.ok()) << ::testing::PrintToString(messages(r.diagnostics));
  const Frame f = std::get<Frame>(r.bindings.at("f"));
  // E's parameter is the sum of the parameters of A and C
  EXPECT_EQ(to_parameter(f, point(r, "E")), to_parameter(f, point(r, "A")) + to_parameter(f, point(r, "C")));
  EXPECT_EQ(point(r, "E"), (Point{Scalar::rational(4), Scalar::rational(2)}));
  EXPECT_EQ(r.traces.size(), 3u);
  EXPECT_EQ(r.assertions.size(), 6u);
  for (const auto& a : r.assertions) EXPECT_TRUE(a.passed) << a.text << ": " << a.detail;
}

TEST(Execute, MultiplicationScript) {
  const auto parsed = dsl::parse(read(script_path("multiplication.geo")));
  ASSERT_TRUE(parsed.ok());
  const auto r = dsl::execute(*parsed.script);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(point(r, "F"), (Point{Scalar::residue(12, 7), Scalar::residue(0, 7)}));
  EXPECT_EQ(point(r, "X"), (Point{Scalar::residue(5, 7), Scalar::residue(0, 7)}));
}

TEST(Execute, EqOfAPointWithItself) {
  const auto parsed = dsl::parse("model rational\npoint E = (1, 2)\nassert eq E E\n");
  ASSERT_TRUE(parsed.ok());
  const auto r = dsl::execute(*parsed.script);
  ASSERT_EQ(r.assertions.size(), 1u);
  EXPECT_TRUE(r.assertions[0].passed);
  EXPECT_EQ(r.assertions[0].text, "assert eq E E");
}

TEST(Execute, FailedAssertionsAndRuntimeErrors) {
  const auto parsed = dsl::parse(
      "model rational\npoint O = (0, 0)\npoint I = (1, 0)\nline l = O I\nframe f = l O I\n"
      "point P = (2, 5)\nadd E = P + I in f\nadd G = E + I in f\nassert sign O + in f\nassert between O I O\n");
  ASSERT_TRUE(parsed.ok());
  const auto r = dsl::execute(*parsed.script);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_NE(r.diagnostics[0].message.find("not-on-line"), std::string::npos);
  EXPECT_EQ(r.diagnostics[0].span.line, 7u);
  EXPECT_NE(r.diagnostics[1].message.find("'E' is unavailable"), std::string::npos);
  ASSERT_EQ(r.assertions.size(), 2u);
  EXPECT_FALSE(r.assertions[0].passed);
  EXPECT_EQ(r.assertions[0].detail, "sign is zero");
  EXPECT_FALSE(r.assertions[1].passed);
}

TEST(Execute, DeterministicAndIndependentOfTheAuxiliarySeed) {
  ScriptGen gen(77);
  for (int n = 0; n < 100; ++n) {
    const auto parsed = dsl::parse(gen.make());
    ASSERT_TRUE(parsed.ok());
    const auto a = dsl::execute(*parsed.script, 3);
    const auto b = dsl::execute(*parsed.script, 3);
    EXPECT_EQ(a.bindings, b.bindings);
    EXPECT_EQ(a.traces, b.traces);
    EXPECT_EQ(messages(a.diagnostics), messages(b.diagnostics));
    // another default auxiliary point changes the traces but not the results
    const auto c = dsl::execute(*parsed.script, 4);
    for (const auto& [name, value] : a.bindings) {
      const auto it = c.bindings.find(name);
      if (it != c.bindings.end()) EXPECT_EQ(it->second, value) << name;
    }
  }
}
