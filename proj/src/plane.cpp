#include "skewline/plane.hpp"

namespace skewline {

std::string Point::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

bool canonical_less(const Point& a, const Point& b) {
  if (canonical_less(a.x, b.x)) return true;
  if (canonical_less(b.x, a.x)) return false;
  return canonical_less(a.y, b.y);
}

Line Line::vertical(Scalar c) {
  Scalar zero = Scalar::zero(c.ring());
  return Line(true, std::move(c), std::move(zero));
}

Line Line::sloped(Scalar m, Scalar b) {
  if (!(m.ring() == b.ring())) {
    throw GeometryError(ErrorKind::RingMismatch, "slope and intercept from different rings");
  }
  return Line(false, std::move(m), std::move(b));
}

const Scalar& Line::abscissa() const {
  if (!vertical_) throw GeometryError(ErrorKind::NotOnLine, "sloped line has no abscissa");
  return first_;
}

const Scalar& Line::slope() const {
  if (vertical_) throw GeometryError(ErrorKind::NotOnLine, "vertical line has no slope");
  return first_;
}

const Scalar& Line::intercept() const {
  if (vertical_) throw GeometryError(ErrorKind::NotOnLine, "vertical line has no intercept");
  return second_;
}

bool Line::contains(const Point& p) const {
  if (vertical_) return p.x == first_;
  return p.y == p.x * first_ + second_;
}

Point Line::at(const Scalar& t) const {
  if (vertical_) return {first_, t};
  return {t, t * first_ + second_};
}

std::string Line::to_string() const {
  if (vertical_) return "x = " + first_.to_string();
  return "y = (" + first_.to_string() + ")*x + (" + second_.to_string() + ")";
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError(ErrorKind::DegenerateJoin, "no unique line through " + p.to_string());
  if (p.x == q.x) return Line::vertical(p.x);
  // direction (dx, dy) = q - p; slope dx^-1 * dy
  Scalar m = (q.x - p.x).inverse() * (q.y - p.y);
  Scalar b = p.y - p.x * m;
  return Line::sloped(std::move(m), std::move(b));
}

Line parallel_through(const Point& p, const Line& l) {
  if (l.is_vertical()) return Line::vertical(p.x);
  return Line::sloped(l.slope(), p.y - p.x * l.slope());
}

bool parallel(const Line& l1, const Line& l2) {
  if (l1.is_vertical() || l2.is_vertical()) return l1.is_vertical() && l2.is_vertical();
  return l1.slope() == l2.slope();
}

Meet intersect(const Line& l1, const Line& l2) {
  if (parallel(l1, l2)) {
    return l1 == l2 ? ParallelOutcome::Coincident : ParallelOutcome::Disjoint;
  }
  if (l1.is_vertical()) return l2.at(l1.abscissa());
  if (l2.is_vertical()) return l1.at(l2.abscissa());
  // t*m1 + b1 = t*m2 + b2  =>  t = (b2 - b1) * (m1 - m2)^-1
  Scalar t = (l2.intercept() - l1.intercept()) * (l1.slope() - l2.slope()).inverse();
  return l1.at(t);
}

bool incident(const Point& p, const Line& l) { return l.contains(p); }

bool collinear(const Point& p, const Point& q, const Point& r) {
  if (p == q) return true;
  return line_through(p, q).contains(r);
}

std::vector<Scalar> PlaneModel::elements() const {
  if (!ring_.finite()) {
    throw GeometryError(ErrorKind::NotEnumerable, ring_.name() + " is infinite");
  }
  std::vector<Scalar> out;
  out.reserve(ring_.modulus());
  for (std::uint32_t v = 0; v < ring_.modulus(); ++v) out.push_back(scalar(v));
  return out;
}

std::vector<Point> PlaneModel::enumerate_points() const {
  auto els = elements();
  std::vector<Point> out;
  out.reserve(els.size() * els.size());
  for (const auto& x : els) {
    for (const auto& y : els) out.push_back({x, y});
  }
  return out;
}

std::vector<Line> PlaneModel::enumerate_lines() const {
  auto els = elements();
  std::vector<Line> out;
  for (const auto& c : els) out.push_back(Line::vertical(c));
  for (const auto& m : els) {
    for (const auto& b : els) out.push_back(Line::sloped(m, b));
  }
  return out;
}

std::vector<Point> PlaneModel::points_on(const Line& l) const {
  std::vector<Point> out;
  for (const auto& t : elements()) out.push_back(l.at(t));
  return out;
}

}  // namespace skewline
