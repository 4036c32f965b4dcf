#include "skewline/ordering.hpp"

#include <algorithm>

namespace skewline {

Scalar order_parameter(const Line& l, const Point& p) {
  if (!l.ring().ordered()) {
    throw GeometryError(ErrorKind::OrderUnavailable, l.ring().name() + " has no compatible order");
  }
  if (!l.contains(p)) {
    throw GeometryError(ErrorKind::NotOnLine, p.to_string() + " is not on " + l.to_string());
  }
  return l.is_vertical() ? p.y : p.x;
}

bool between(const Line& l, const Point& a, const Point& b, const Point& c) {
  const auto ta = order_parameter(l, a);
  const auto tb = order_parameter(l, b);
  const auto tc = order_parameter(l, c);
  auto lt = [](const Scalar& x, const Scalar& y) { return compare(x, y) == Ordering::Less; };
  return (lt(ta, tb) && lt(tb, tc)) || (lt(tc, tb) && lt(tb, ta));
}

bool same_side(const Line& l, const Point& pivot, const Point& b, const Point& c) {
  if (pivot == b || pivot == c || b == c) {
    // still validate the inputs
    order_parameter(l, pivot);
    order_parameter(l, b);
    order_parameter(l, c);
    return false;
  }
  return between(l, pivot, b, c) != between(l, pivot, c, b);
}

std::string_view sign_class_name(SignClass s) {
  switch (s) {
    case SignClass::Negative: return "negative";
    case SignClass::Zero: return "zero";
    case SignClass::Positive: return "positive";
  }
  return "?";
}

SignClass sign_classify(const Frame& frame, const Point& x) {
  const auto& o = frame.origin();
  const auto& i = frame.unit();
  order_parameter(frame.line(), x);
  if (x == o) return SignClass::Zero;
  // I itself is positive: the betweenness conditions are vacuous there.
  if (x == i || between(frame, o, x, i) || between(frame, o, i, x)) return SignClass::Positive;
  return SignClass::Negative;
}

namespace {

Witness points_witness(std::string note, std::initializer_list<std::pair<const char*, const Point*>> pts) {
  Witness w;
  w.note = std::move(note);
  for (const auto& [name, p] : pts) w.points.emplace_back(name, *p);
  return w;
}

}  // namespace

AxiomReport check_order_axioms(const Line& l, std::span<const std::array<Point, 4>> quadruples) {
  ClaimResult lo1("Lo.1", "betweenness is symmetric");
  ClaimResult lo2("Lo.2", "exactly one of three distinct points lies between the others");
  ClaimResult lo3("Lo.3", "[A,B,C] and [B,C,D] give [A,B,D] and [A,C,D]");
  ClaimResult lo4("Lo.4", "[A,B,C] and [C,B,D] give [D,A,B] or [A,D,B]");
  ClaimResult excl("Prop-exclusion", "two of [B,A,C], [C,A,D], [D,A,B] exclude the third");
  ClaimResult chain("Prop-chaining", "[A,B,C] and [A,C,D] give [A,B,D] and [B,C,D]");
  ClaimResult side("same-side-transitivity", "same side of A is transitive");
  ClaimResult tri("sign-trichotomy", "every point is exactly one of negative, zero, positive");

  for (const auto& quad : quadruples) {
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
      const Point& a = quad[idx[0]];
      const Point& b = quad[idx[1]];
      const Point& c = quad[idx[2]];
      const Point& d = quad[idx[3]];
      auto w = [&](const char* note) {
        return points_witness(note, {{"A", &a}, {"B", &b}, {"C", &c}, {"D", &d}});
      };
      const bool abc = between(l, a, b, c);
      if (abc) lo1.check(between(l, c, b, a), [&] { return w("[C,B,A] fails"); });
      {
        int count = int(abc) + int(between(l, b, c, a)) + int(between(l, c, a, b));
        lo2.check(count == 1, [&] { return w("not exactly one placement"); });
      }
      if (abc && between(l, b, c, d)) {
        lo3.check(between(l, a, b, d) && between(l, a, c, d), [&] { return w("chain conclusion fails"); });
      }
      if (abc && between(l, c, b, d)) {
        lo4.check(between(l, d, a, b) || between(l, a, d, b), [&] { return w("neither [D,A,B] nor [A,D,B]"); });
      }
      {
        int count = int(between(l, b, a, c)) + int(between(l, c, a, d)) + int(between(l, d, a, b));
        if (count >= 2) excl.check(count == 2, [&] { return w("all three hold"); });
      }
      if (abc && between(l, a, c, d)) {
        chain.check(between(l, a, b, d) && between(l, b, c, d), [&] { return w("chaining conclusion fails"); });
      }
      if (same_side(l, a, b, c) && same_side(l, a, c, d)) {
        side.check(same_side(l, a, b, d), [&] { return w("B and D on opposite sides of A"); });
      }
      if (!(a == b)) {
        // (a, b) as a frame: classify c by the defining conditions directly
        int count = int(c == a) + int(c == b || between(l, a, c, b) || between(l, a, b, c)) +
                    int(between(l, c, a, b));
        tri.check(count == 1, [&] { return w("sign conditions overlap or leave a gap"); });
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return AxiomReport{{lo1, lo2, lo3, lo4, excl, chain, side, tri}};
}

ConeReport check_positive_cone(const Frame& frame, const ConeSamples& samples, const Point& b) {
  ClaimResult add("add-closure", "sum of positives is positive");
  ClaimResult mul("mul-closure", "product of positives is positive, in both orders");
  ClaimResult neg("neg-to-K-", "negation of a positive is negative");
  ClaimResult neg_add("neg-sum-closure", "sum of negatives is negative");

  auto positive = [&](const Point& p) { return sign_classify(frame, p) == SignClass::Positive; };
  auto negative = [&](const Point& p) { return sign_classify(frame, p) == SignClass::Negative; };

  for (const auto& [a, c] : samples.positive_pairs) {
    const Point sum = point_add(frame, a, c, b);
    add.check(positive(sum), [&] { return points_witness("A+C not positive", {{"A", &a}, {"C", &c}, {"A+C", &sum}}); });
    const Point ac = point_mul(frame, a, c, b);
    const Point ca = point_mul(frame, c, a, b);
    mul.check(positive(ac) && positive(ca), [&] {
      return points_witness("product not positive", {{"A", &a}, {"C", &c}, {"A*C", &ac}, {"C*A", &ca}});
    });
  }
  for (const auto& a : samples.positives) {
    const Point minus = point_neg(frame, a, b);
    neg.check(negative(minus), [&] { return points_witness("-A not negative", {{"A", &a}, {"-A", &minus}}); });
  }
  for (const auto& [a, c] : samples.negative_pairs) {
    const Point sum = point_add(frame, a, c, b);
    neg_add.check(negative(sum),
                  [&] { return points_witness("A+C not negative", {{"A", &a}, {"C", &c}, {"A+C", &sum}}); });
  }
  return ConeReport{{add, mul, neg, neg_add}};
}

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Undetermined: return "undetermined";
    case Orientation::Preserving: return "preserving";
    case Orientation::Reversing: return "reversing";
    case Orientation::Mixed: return "mixed";
  }
  return "?";
}

namespace {

Orientation combine(Orientation acc, Orientation next) {
  if (acc == Orientation::Undetermined) return next;
  if (next == Orientation::Undetermined || next == acc) return acc;
  return Orientation::Mixed;
}

Orientation pair_orientation(const Line& src, const Point& p, const Point& q, const Line& dst, const Point& fp,
                             const Point& fq) {
  auto before = compare(order_parameter(src, p), order_parameter(src, q));
  auto after = compare(order_parameter(dst, fp), order_parameter(dst, fq));
  if (before == Ordering::Equal || after == Ordering::Equal) return Orientation::Undetermined;
  return before == after ? Orientation::Preserving : Orientation::Reversing;
}

// Betweenness of every rotation of (a, b, c) must match that of the images.
bool same_betweenness(const Line& src, const std::array<Point, 3>& pts, const Line& dst,
                      const std::array<Point, 3>& img) {
  for (int r = 0; r < 3; ++r) {
    const int i = r, j = (r + 1) % 3, k = (r + 2) % 3;
    if (between(src, pts[i], pts[j], pts[k]) != between(dst, img[i], img[j], img[k])) return false;
  }
  return true;
}

Witness triple_witness(std::string note, const std::array<Point, 3>& pts, const std::array<Point, 3>& img) {
  return points_witness(std::move(note), {{"A", &pts[0]}, {"B", &pts[1]}, {"C", &pts[2]},
                                          {"f(A)", &img[0]}, {"f(B)", &img[1]}, {"f(C)", &img[2]}});
}

Point off_line_point(const Line& l, const Point& anchor) {
  const auto one = Scalar::one(l.ring());
  Point up{anchor.x, anchor.y + one};
  if (!l.contains(up)) return up;
  return {anchor.x + one, anchor.y};
}

}  // namespace

OrderReport check_map_order(const ParallelProjection& pp, std::span<const std::array<Point, 3>> triples) {
  OrderReport report;
  ClaimResult claim("projection-order", "a parallel projection preserves or reverses the order");
  for (const auto& pts : triples) {
    std::array<Point, 3> img{project(pp, pts[0]), project(pp, pts[1]), project(pp, pts[2])};
    Orientation local = Orientation::Undetermined;
    for (int i = 0; i < 3; ++i) {
      local = combine(local, pair_orientation(pp.source(), pts[i], pts[(i + 1) % 3], pp.target(), img[i],
                                              img[(i + 1) % 3]));
    }
    Orientation next = combine(report.orientation, local);
    const bool ok = same_betweenness(pp.source(), pts, pp.target(), img) && next != Orientation::Mixed;
    claim.check(ok, [&] { return triple_witness("order neither uniformly preserved nor reversed", pts, img); });
    report.orientation = next;
  }
  report.claims.push_back(std::move(claim));
  return report;
}

OrderReport check_map_order(const Translation& t, const Line& l, std::span<const std::array<Point, 3>> triples) {
  OrderReport report;
  ClaimResult direct("translation-order", "translations preserve betweenness");
  ClaimResult staged("translation-order-staged",
                     "translations preserve betweenness via parallel projections or a two-stage split");
  const Line image_line = apply_translation(t, l);

  for (const auto& pts : triples) {
    std::array<Point, 3> img{apply_translation(t, pts[0]), apply_translation(t, pts[1]),
                             apply_translation(t, pts[2])};
    Orientation local = Orientation::Undetermined;
    for (int i = 0; i < 3; ++i) {
      local = combine(local, pair_orientation(l, pts[i], pts[(i + 1) % 3], image_line, img[i], img[(i + 1) % 3]));
    }
    report.orientation = combine(report.orientation, local);
    direct.check(same_betweenness(l, pts, image_line, img) && local != Orientation::Reversing,
                 [&] { return triple_witness("betweenness not preserved", pts, img); });

    // incidence-only path
    bool ok = true;
    std::array<Point, 3> via_img = pts;
    if (t.is_identity()) {
      via_img = pts;
    } else if (!moves_along(t, l)) {
      auto pp = translation_as_projection(t, l);
      for (int i = 0; i < 3; ++i) via_img[i] = project(pp, pts[i]);
      ok = same_betweenness(l, pts, pp.target(), via_img);
    } else {
      const Point via = off_line_point(l, pts[0]);
      auto [first, second] = decompose_translation(t, pts[0], via);
      auto pp1 = translation_as_projection(first, l);
      std::array<Point, 3> mid{project(pp1, pts[0]), project(pp1, pts[1]), project(pp1, pts[2])};
      auto pp2 = translation_as_projection(second, pp1.target());
      for (int i = 0; i < 3; ++i) via_img[i] = project(pp2, mid[i]);
      ok = same_betweenness(l, pts, pp1.target(), mid) && same_betweenness(pp1.target(), mid, l, via_img);
    }
    ok = ok && via_img == img;
    staged.check(ok, [&] { return triple_witness("staged images disagree or reorder", pts, via_img); });
  }
  report.claims.push_back(std::move(direct));
  report.claims.push_back(std::move(staged));
  return report;
}

}  // namespace skewline
