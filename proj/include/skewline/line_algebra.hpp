#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skewline/maps.hpp"
#include "skewline/plane.hpp"

namespace skewline {

// A line with two distinguished points: O acts as zero and I as one for the
// point arithmetic constructed on the line.
class Frame {
 public:
  // Throws InvalidFrame unless O != I and both lie on `line`.
  Frame(Line line, Point origin, Point unit);
  static Frame through(const Point& origin, const Point& unit);
  // y = 0 with O = (0, 0), I = (1, 0).
  static Frame standard(const RingDescriptor& ring);

  const Line& line() const { return line_; }
  const Point& origin() const { return origin_; }
  const Point& unit() const { return unit_; }
  RingDescriptor ring() const { return origin_.ring(); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Line line_;
  Point origin_;
  Point unit_;
};

struct TraceObject {
  std::string label;
  std::variant<Point, Line> value;

  bool is_point() const { return std::holds_alternative<Point>(value); }
  friend bool operator==(const TraceObject&, const TraceObject&) = default;
};

// Every auxiliary object produced by one construction, in creation order.
// The last step is the result point. Projections and translations carry no
// frame or auxiliary point.
struct ConstructionTrace {
  std::string op;  // add | sub | mul | inv-right | inv-left | project | translate
  std::optional<Frame> frame;
  std::vector<std::pair<std::string, Point>> inputs;
  std::optional<Point> auxiliary;
  std::vector<TraceObject> steps;
  Point result;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

enum class Side { Left, Right };

// Deterministic off-line point. Seed 0 picks O + (0, 1), or O + (1, 0) when
// the former lies on the frame line.
Point choose_auxiliary(const Frame& frame, std::uint64_t seed);

// The constructions below take the auxiliary point B explicitly; a trace is
// written when `trace` is non-null. Operands off the frame line throw
// NotOnLine; a B on the line or a failed meet throws ConstructionDegenerate.

// D = (parallel to the frame line through B) ∩ (parallel to OB through A);
// A + C = (parallel to CB through D) ∩ frame line.
Point point_add(const Frame& frame, const Point& a, const Point& c, const Point& b,
                ConstructionTrace* trace = nullptr);
// The C with A + C = E: D from A as in addition, then C is where the
// parallel to DE through B meets the frame line.
Point point_sub(const Frame& frame, const Point& e, const Point& a, const Point& b,
                ConstructionTrace* trace = nullptr);
// -A, i.e. point_sub(O, A).
Point point_neg(const Frame& frame, const Point& a, const Point& b, ConstructionTrace* trace = nullptr);
// E = (parallel to IB through A) ∩ OB; A * C = (parallel to BC through E) ∩ frame line.
// The factors do not commute in general.
Point point_mul(const Frame& frame, const Point& a, const Point& c, const Point& b,
                ConstructionTrace* trace = nullptr);
// Right: X with A * X = I. Left: X with X * A = I. Throws DivisionByZero for A = O.
Point point_inv(const Frame& frame, const Point& a, Side side, const Point& b,
                ConstructionTrace* trace = nullptr);

// Steps: source, target and direction lines, the parallel to the direction
// through A, then the image.
Point project_traced(const ParallelProjection& pp, const Point& a, ConstructionTrace* trace);
// Inputs P and the displacement v = (dx, dy); steps: the line through P and
// its image (absent for the identity), then the image.
Point translate_traced(const Translation& t, const Point& p, ConstructionTrace* trace);

// Re-executes a recorded construction from its frame, inputs and auxiliary
// point. Throws InvalidTrace for an unknown op or malformed inputs.
ConstructionTrace replay(const ConstructionTrace& trace);

// The coordinate parameter t with P = O + t(I - O). Used as an oracle only;
// the constructions never consult it.
Scalar to_parameter(const Frame& frame, const Point& p);
Point from_parameter(const Frame& frame, const Scalar& t);

struct CayleyTables {
  std::vector<Point> elements;  // elements[k] has parameter k
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::vector<std::size_t>> mul;
};

// Throws NotEnumerable for infinite rings.
CayleyTables cayley_tables(const Frame& frame, std::uint64_t seed = 0);

std::string format_table_text(const CayleyTables& tables, bool multiplication);
std::string format_table_csv(const CayleyTables& tables, bool multiplication);

}  // namespace skewline
