#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewline/sampling.hpp"
#include "skewline/plane.hpp"

using namespace skewline;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

Scalar q(long long a, long long b = 1) { return Scalar::rational(a, b); }
Point qp(long long x, long long y) { return {q(x), q(y)}; }
Point qp(Scalar x, Scalar y) { return {std::move(x), std::move(y)}; }
Scalar of(const oracle::Frac& f) { return q(f.n, f.d); }

// Slope and intercept of the line through two points with distinct x.
std::pair<oracle::Frac, oracle::Frac> solve_line(oracle::Frac x1, oracle::Frac y1, oracle::Frac x2, oracle::Frac y2) {
  const oracle::Frac m = (y2 - y1) / (x2 - x1);
  return {m, y1 - x1 * m};
}

}  // namespace

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(qp(0, 0), qp(0, 5)), Line::vertical(q(0)));
  EXPECT_EQ(line_through(qp(0, -1), qp(4, -1)), Line::sloped(q(0), q(-1)));
  const auto [m, b] = solve_line(1, 1, 2, 3);
  EXPECT_EQ(line_through(qp(1, 1), qp(2, 3)), Line::sloped(of(m), of(b)));
  EXPECT_EQ(line_through(qp(1, 1), qp(2, 3)), Line::sloped(q(2), q(-1)));
}

TEST(LineThrough, SamePointIsDegenerate) {
  try {
    line_through(qp(1, 2), qp(1, 2));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateJoin);
  }
}

TEST(LineThrough, MatchesTwoPointSolveOnRandomRationals) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20), den(1, 20);
  for (int n = 0; n < 300; ++n) {
    const oracle::Frac x1(d(rng), den(rng)), y1(d(rng), den(rng)), x2(d(rng), den(rng)), y2(d(rng), den(rng));
    const Point p = qp(of(x1), of(y1)), r = qp(of(x2), of(y2));
    if (p == r) continue;
    const Line l = line_through(p, r);
    if (x1 == x2) {
      EXPECT_EQ(l, Line::vertical(of(x1)));
    } else {
      const auto [m, b] = solve_line(x1, y1, x2, y2);
      EXPECT_EQ(l, Line::sloped(of(m), of(b)));
    }
    EXPECT_TRUE(incident(p, l));
    EXPECT_TRUE(incident(r, l));
  }
}

TEST(ParallelThrough, Examples) {
  EXPECT_EQ(parallel_through(qp(2, 2), Line::sloped(q(0), q(-1))), Line::sloped(q(0), q(2)));
  const Line l = Line::sloped(q(3), q(1));
  EXPECT_EQ(parallel_through(qp(1, 4), l), l);
  EXPECT_EQ(parallel_through(qp(1, 0), Line::vertical(q(5))), Line::vertical(q(1)));
}

TEST(Intersect, Examples) {
  EXPECT_EQ(std::get<Point>(intersect(Line::sloped(q(1), q(0)), Line::vertical(q(3)))), qp(3, 3));
  EXPECT_EQ(std::get<ParallelOutcome>(intersect(Line::sloped(q(0), q(1)), Line::sloped(q(0), q(-1)))),
            ParallelOutcome::Disjoint);
  const Line l = Line::sloped(q(2, 5), q(2));
  EXPECT_EQ(std::get<ParallelOutcome>(intersect(l, l)), ParallelOutcome::Coincident);
  // x*2/5 + 2 = x*(-2/5)  =>  x = -5/2, y = 1
  const oracle::Frac x = oracle::Frac(-2) / (oracle::Frac(2, 5) - oracle::Frac(-2, 5));
  const oracle::Frac y = x * oracle::Frac(-2, 5);
  const Point meet = std::get<Point>(intersect(l, Line::sloped(q(-2, 5), q(0))));
  EXPECT_EQ(meet, qp(of(x), of(y)));
  EXPECT_EQ(meet, qp(q(-5, 2), q(1)));
}

TEST(Incidence, Examples) {
  EXPECT_TRUE(incident(qp(3, 3), Line::sloped(q(1), q(0))));
  EXPECT_FALSE(incident(qp(0, 0), Line::vertical(q(1))));
  const Line eca = line_through(qp(q(1), q(12, 5)), qp(q(4), q(18, 5)));
  EXPECT_TRUE(incident(qp(q(5, 2), q(3)), eca));
}

TEST(Collinear, Examples) {
  EXPECT_TRUE(collinear(qp(0, 0), qp(1, 1), qp(2, 2)));
  EXPECT_FALSE(collinear(qp(0, 0), qp(1, 0), qp(0, 1)));
  // N, L, M of the hexagon figure on y = 1.
  EXPECT_TRUE(collinear(qp(q(55, 34), q(1)), qp(q(145, 46), q(1)), qp(q(41, 20), q(1))));
  EXPECT_FALSE(collinear(qp(q(55, 34), q(1)), qp(q(145, 46), q(1)), qp(q(41, 20), q(2))));
}

TEST(Parallel, SlopesAndVerticals) {
  EXPECT_TRUE(parallel(Line::sloped(q(2), q(0)), Line::sloped(q(2), q(7))));
  EXPECT_FALSE(parallel(Line::sloped(q(2), q(0)), Line::sloped(q(3), q(0))));
  EXPECT_TRUE(parallel(Line::vertical(q(1)), Line::vertical(q(4))));
  EXPECT_FALSE(parallel(Line::vertical(q(1)), Line::sloped(q(0), q(0))));
}

TEST(Line, QuaternionParameterMultipliesFromTheLeft) {
  const auto h = RingDescriptor::quaternion();
  const Scalar i = Scalar::quaternion(0, 1, 0, 0), j = Scalar::quaternion(0, 0, 1, 0);
  const Line l = Line::sloped(j, Scalar::zero(h));
  EXPECT_EQ(l.at(i), (Point{i, i * j}));
  EXPECT_TRUE(l.contains({i, Scalar::quaternion(0, 0, 0, 1)}));
  EXPECT_FALSE(l.contains({i, Scalar::quaternion(0, 0, 0, -1)}));
}

TEST(PlaneModel, PointCounts) {
  EXPECT_EQ(PlaneModel(RingDescriptor::prime_field(2)).enumerate_points().size(), 4u);
  EXPECT_EQ(PlaneModel(RingDescriptor::prime_field(3)).enumerate_points().size(), 9u);
  EXPECT_EQ(PlaneModel(RingDescriptor::prime_field(5)).enumerate_points().size(), 25u);
  EXPECT_EQ(PlaneModel(RingDescriptor::prime_field(5)).enumerate_lines().size(), 30u);
  try {
    PlaneModel(kQ).enumerate_points();
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEnumerable);
  }
}

TEST(PlaneModel, EveryLineHasPPoints) {
  const PlaneModel m(RingDescriptor::prime_field(5));
  for (const Line& l : m.enumerate_lines()) {
    const auto pts = m.points_on(l);
    EXPECT_EQ(pts.size(), 5u) << l.to_string();
    for (const Point& p : pts) EXPECT_TRUE(incident(p, l));
  }
}

class FiniteAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FiniteAxioms, UniqueJoin) {
  const PlaneModel m(RingDescriptor::prime_field(GetParam()));
  const auto points = m.enumerate_points();
  const auto lines = m.enumerate_lines();
  for (const Point& p : points) {
    for (const Point& r : points) {
      if (p == r) continue;
      int count = 0;
      for (const Line& l : lines) count += incident(p, l) && incident(r, l);
      EXPECT_EQ(count, 1);
      const Line l = line_through(p, r);
      EXPECT_TRUE(incident(p, l) && incident(r, l));
    }
  }
}

TEST_P(FiniteAxioms, UniqueParallel) {
  const PlaneModel m(RingDescriptor::prime_field(GetParam()));
  const auto lines = m.enumerate_lines();
  for (const Point& p : m.enumerate_points()) {
    for (const Line& l : lines) {
      if (incident(p, l)) continue;
      int count = 0;
      for (const Line& k : lines) {
        if (!incident(p, k)) continue;
        bool disjoint = true;
        for (const Point& x : m.points_on(k)) disjoint = disjoint && !incident(x, l);
        count += disjoint;
      }
      EXPECT_EQ(count, 1);
      const Line par = parallel_through(p, l);
      EXPECT_TRUE(incident(p, par));
      EXPECT_TRUE(parallel(par, l));
    }
  }
}

TEST_P(FiniteAxioms, NonCollinearTriple) {
  const PlaneModel m(RingDescriptor::prime_field(GetParam()));
  EXPECT_FALSE(collinear(m.point(0, 0), m.point(1, 0), m.point(0, 1)));
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FiniteAxioms, ::testing::Values(2u, 3u));

TEST(Axioms, NonCollinearTripleInInfiniteModels) {
  for (const auto& ring : {kQ, RingDescriptor::quaternion()}) {
    const PlaneModel m(ring);
    EXPECT_FALSE(collinear(m.point(0, 0), m.point(1, 0), m.point(0, 1)));
  }
}

TEST(Axioms, JoinsMeetAtTheSharedPoint) {
  for (const auto& ring : {kQ, RingDescriptor::prime_field(11), RingDescriptor::quaternion()}) {
    Sampler s(ring, 17);
    int checked = 0;
    while (checked < 200) {
      const Point p = s.point(), a = s.point(), b = s.point();
      if (p == a || p == b || a == b || collinear(p, a, b)) continue;
      const Meet meet = intersect(line_through(p, a), line_through(p, b));
      ASSERT_TRUE(std::holds_alternative<Point>(meet));
      EXPECT_EQ(std::get<Point>(meet), p);
      ++checked;
    }
  }
}

TEST(Axioms, RandomParallelIsUniqueAndDisjoint) {
  for (const auto& ring : {kQ, RingDescriptor::quaternion()}) {
    Sampler s(ring, 23);
    for (int n = 0; n < 200; ++n) {
      const Line l = s.line();
      const Point p = s.point_off(l);
      const Line par = parallel_through(p, l);
      EXPECT_TRUE(incident(p, par));
      EXPECT_EQ(std::get<ParallelOutcome>(intersect(par, l)), ParallelOutcome::Disjoint);
      // any other line through p meets l
      const Point r = s.point();
      if (r != p && !incident(r, par)) EXPECT_TRUE(std::holds_alternative<Point>(intersect(line_through(p, r), l)));
    }
  }
}
