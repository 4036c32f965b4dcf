#pragma once

#include <string>
#include <variant>
#include <vector>

#include "skewline/scalar.hpp"

namespace skewline {

struct Point {
  Scalar x;
  Scalar y;

  RingDescriptor ring() const { return x.ring(); }
  std::string to_string() const;  // "(x, y)"

  friend bool operator==(const Point&, const Point&) = default;
};

bool canonical_less(const Point& a, const Point& b);

// A line of the coordinate plane. Sloped lines are the point sets
// {(t, t*m + b)}: the parameter multiplies the slope from the left, which
// keeps the plane Desarguesian over non-commutative rings.
class Line {
 public:
  static Line vertical(Scalar c);
  static Line sloped(Scalar m, Scalar b);

  bool is_vertical() const { return vertical_; }
  // x-coordinate of a vertical line.
  const Scalar& abscissa() const;
  const Scalar& slope() const;
  const Scalar& intercept() const;
  RingDescriptor ring() const { return first_.ring(); }

  bool contains(const Point& p) const;
  // Point with parameter t: (c, t) for verticals, (t, t*m + b) otherwise.
  Point at(const Scalar& t) const;

  // "x = c" or "y = (m)*x + (b)"; the product reads as x times m.
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(bool vertical, Scalar first, Scalar second)
      : vertical_(vertical), first_(std::move(first)), second_(std::move(second)) {}

  bool vertical_;
  Scalar first_;   // c or m
  Scalar second_;  // unused (zero) or b
};

enum class ParallelOutcome { Coincident, Disjoint };
using Meet = std::variant<Point, ParallelOutcome>;

Line line_through(const Point& p, const Point& q);
// Returns l itself when p lies on l.
Line parallel_through(const Point& p, const Line& l);
Meet intersect(const Line& l1, const Line& l2);
bool incident(const Point& p, const Line& l);
bool collinear(const Point& p, const Point& q, const Point& r);
// Equal or disjoint.
bool parallel(const Line& l1, const Line& l2);

class PlaneModel {
 public:
  explicit PlaneModel(RingDescriptor ring) : ring_(ring) {}

  const RingDescriptor& ring() const { return ring_; }

  Scalar scalar(long long n) const { return Scalar::from_int(ring_, n); }
  Point point(long long x, long long y) const { return {scalar(x), scalar(y)}; }

  // All p^2 points, row-major in (x, y). Throws NotEnumerable for infinite rings.
  std::vector<Point> enumerate_points() const;
  // All p^2 + p lines: verticals first, then sloped lines by (m, b).
  std::vector<Line> enumerate_lines() const;
  std::vector<Point> points_on(const Line& l) const;
  std::vector<Scalar> elements() const;

 private:
  RingDescriptor ring_;
};

}  // namespace skewline
