#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "skewline/line_algebra.hpp"
#include "skewline/maps.hpp"
#include "skewline/report.hpp"

namespace skewline {

// Position of p along l used to induce the order: x for sloped lines, y for
// vertical ones. Throws OrderUnavailable on unordered rings and NotOnLine.
Scalar order_parameter(const Line& l, const Point& p);

// Strict betweenness [a, b, c]: b lies strictly between a and c.
bool between(const Line& l, const Point& a, const Point& b, const Point& c);
inline bool between(const Frame& f, const Point& a, const Point& b, const Point& c) {
  return between(f.line(), a, b, c);
}

// b and c on the same side of the pivot: exactly one of [pivot, b, c] and
// [pivot, c, b]. False unless the three points are mutually distinct.
bool same_side(const Line& l, const Point& pivot, const Point& b, const Point& c);

enum class SignClass { Negative, Zero, Positive };

std::string_view sign_class_name(SignClass s);

// Zero for O; Positive for I, [O, X, I] or [O, I, X]; Negative for [X, O, I].
SignClass sign_classify(const Frame& frame, const Point& x);

struct AxiomReport {
  std::vector<ClaimResult> claims;
  bool passed() const { return all_ok(claims); }
};

// Checks the four order axioms, both betweenness propositions, same-side
// transitivity and sign trichotomy over every ordering of each quadruple.
// `tested` counts instances whose premise held. Quadruples must consist of
// distinct points on l.
AxiomReport check_order_axioms(const Line& l, std::span<const std::array<Point, 4>> quadruples);

struct ConeSamples {
  std::vector<std::pair<Point, Point>> positive_pairs;
  std::vector<Point> positives;
  std::vector<std::pair<Point, Point>> negative_pairs;
};

using ConeReport = AxiomReport;

// Positive cone closure under the constructed + and * (both factor orders),
// -A negative for positive A, negatives closed under +. Uses auxiliary b.
ConeReport check_positive_cone(const Frame& frame, const ConeSamples& samples, const Point& b);

enum class Orientation { Undetermined, Preserving, Reversing, Mixed };

std::string_view orientation_name(Orientation o);

struct OrderReport {
  std::vector<ClaimResult> claims;
  Orientation orientation = Orientation::Undetermined;
  bool passed() const { return all_ok(claims) && orientation != Orientation::Mixed; }
};

// Every triple lies on pp.source(). Betweenness must survive and the induced
// orientation must be uniformly preserved or uniformly reversed.
OrderReport check_map_order(const ParallelProjection& pp, std::span<const std::array<Point, 3>> triples);

// Triples lie on `l`. Checks betweenness under the displacement map and,
// independently, along the incidence-only path: a projection onto the
// parallel image line, or for translations along l the two-stage split
// through an off-line point.
OrderReport check_map_order(const Translation& t, const Line& l, std::span<const std::array<Point, 3>> triples);

}  // namespace skewline
