#include "skewline/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "skewline/configurations.hpp"
#include "skewline/line_algebra.hpp"
#include "skewline/maps.hpp"
#include "skewline/ordering.hpp"
#include "skewline/sampling.hpp"

namespace skewline {

const ClaimResult* SuiteReport::find(std::string_view claim) const {
  for (const auto& c : checks) {
    if (c.claim == claim) return &c;
  }
  return nullptr;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry{
      {"affine-1", "affine-axioms", "two distinct points lie on exactly one line"},
      {"affine-2", "affine-axioms", "through a point off a line passes exactly one parallel"},
      {"affine-3", "affine-axioms", "three non-collinear points exist; every line has two points"},
      {"Desargues", "desargues", "parallel-rail Desargues axiom: AB||A'B', BC||B'C' imply AC||A'C'"},
      {"Pappus", "pappus", "Pappus hexagon intersections N, L, M are collinear"},
      {"affine-Pappus", "pappus", "affine Pappus condition agrees with the hexagon check"},
      {"Tecklenburg-GF(p)", "pappus", "every finite Desarguesian affine plane is Pappian"},
      {"finite-ordered-Pappian", "pappus", "finite ordered Desarguesian planes in the real plane are Pappian"},
      {"Lo.1", "order-axioms", "[A,B,C] implies distinct collinear points and [C,B,A]"},
      {"Lo.2", "order-axioms", "for distinct A, C some B has [A,C,B]"},
      {"Lo.3", "order-axioms", "of three collinear points at most one lies between the others"},
      {"Lo.4", "order-axioms", "[A,B,C] implies [A,B,D] or [D,B,C]"},
      {"Prop-exclusion", "order-axioms", "exactly one of three distinct collinear points is between"},
      {"Prop-chaining", "order-axioms", "[A,B,C] and [A,C,D] imply [A,B,D] and [B,C,D]"},
      {"same-side-transitivity", "order-axioms", "lying on the same side of a point is transitive"},
      {"sign-trichotomy", "order-axioms", "each point of the line is in exactly one of K-, {O}, K+"},
      {"add-assoc", "skew-field", "(A+C)+E = A+(C+E)"},
      {"mul-assoc", "skew-field", "(A*C)*E = A*(C*E)"},
      {"add-comm", "skew-field", "A+C = C+A"},
      {"distrib-left", "skew-field", "A*(C+E) = A*C + A*E"},
      {"distrib-right", "skew-field", "(A+C)*E = A*E + C*E"},
      {"neutral-O", "skew-field", "A+O = O+A = A"},
      {"neutral-I", "skew-field", "A*I = I*A = A"},
      {"add-inverse", "skew-field", "A + (-A) = (-A) + A = O"},
      {"mul-inverse", "skew-field", "left and right inverses coincide and are two-sided"},
      {"mul-commutativity", "skew-field",
       "commutative coordinates give A*C = C*A; quaternions give i*j = k, j*i = -k"},
      {"oracle-agreement", "skew-field", "the line parameter carries + and * to the coordinate operations"},
      {"B-independence", "skew-field", "A+C and A*C do not depend on the auxiliary point B"},
      {"frame-independence", "skew-field", "the skew fields of two frames are isomorphic by parameter transport"},
      {"cayley-tables", "skew-field", "constructed tables on GF(p) match modular arithmetic"},
      {"add-closure", "positive-cone", "A, C in K+ imply A+C in K+"},
      {"mul-closure", "positive-cone", "A, C in K+ imply A*C and C*A in K+"},
      {"neg-to-K-", "positive-cone", "A in K+ implies -A in K-"},
      {"neg-sum-closure", "positive-cone", "A, C in K- imply A+C in K-"},
      {"finite-ordered-skew-field", "positive-cone",
       "finite skew fields over an ordered line in the real plane are ordered"},
      {"projection-order", "map-order", "a parallel projection preserves or reverses the order"},
      {"projection-bijection", "map-order", "a parallel projection is a bijection with the swapped inverse"},
      {"translation-order", "map-order", "translations preserve betweenness"},
      {"translation-order-staged", "map-order",
       "translations preserve betweenness via parallel projections or a two-stage split"},
      {"translation-image", "map-order", "a translation maps lines to parallels and has no fixed point"},
  };
  return registry;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"affine-axioms", "desargues",     "pappus",   "order-axioms",
                                              "skew-field",    "positive-cone", "map-order"};
  return names;
}

namespace {

bool needs_order(std::string_view suite) {
  return suite == "order-axioms" || suite == "positive-cone" || suite == "map-order";
}

ClaimResult claim(std::string_view id) {
  for (const auto& info : claim_registry()) {
    if (info.id == id) return ClaimResult(info.id, info.anchor);
  }
  throw GeometryError(ErrorKind::SuiteModelMismatch, "unregistered claim '" + std::string(id) + "'");
}

ClaimResult not_instantiable(std::string_view id, std::string reason) {
  ClaimResult c = claim(id);
  c.status_override = ClaimStatus::NotInstantiable;
  c.reason = std::move(reason);
  return c;
}

ClaimResult skipped(std::string_view id, std::string reason) {
  ClaimResult c = claim(id);
  c.status_override = ClaimStatus::Skipped;
  c.reason = std::move(reason);
  return c;
}

// Independent streams per claim so adding samples to one claim leaves the
// others unchanged.
std::uint64_t stream(std::uint64_t seed, std::uint64_t k) {
  return seed * 0x9E3779B97F4A7C15ULL + k * 0xBF58476D1CE4E5B9ULL + 1;
}

bool exhaustive(const RunMode& mode) { return mode.kind == ModeKind::Exhaustive; }

std::uint64_t count_or(const RunMode& mode, std::uint64_t fallback) {
  return mode.kind == ModeKind::Sampled ? std::max<std::uint64_t>(mode.samples, 1) : fallback;
}

Witness note_points(std::string note, std::vector<std::pair<std::string, Point>> pts) {
  return Witness{std::move(note), std::move(pts), {}};
}

// ---------------------------------------------------------------- affine

void affine_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  const auto ring = model.ring();
  ClaimResult a1 = claim("affine-1");
  ClaimResult a2 = claim("affine-2");
  ClaimResult a3 = claim("affine-3");

  const Point o = model.point(0, 0), e1 = model.point(1, 0), e2 = model.point(0, 1);
  a3.check(!collinear(o, e1, e2), [&] { return note_points("standard triple collinear", {{"O", o}, {"E1", e1}, {"E2", e2}}); });

  if (exhaustive(mode)) {
    const auto points = model.enumerate_points();
    const auto lines = model.enumerate_lines();
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const Point& p = points[i];
        const Point& q = points[j];
        const Line l = line_through(p, q);
        std::size_t through = 0;
        for (const auto& m : lines) through += m.contains(p) && m.contains(q);
        a1.check(through == 1 && l.contains(p) && l.contains(q),
                 [&] { return note_points("join not unique", {{"P", p}, {"Q", q}}); });
      }
    }
    for (const auto& l : lines) {
      a3.check(model.points_on(l).size() == static_cast<std::size_t>(ring.modulus()),
               [&] { return Witness{"line with too few points", {}, {{"l", l}}}; });
      for (const auto& p : points) {
        if (l.contains(p)) continue;
        const Line m = parallel_through(p, l);
        std::size_t disjoint = 0;
        for (const auto& k : lines) {
          disjoint += k.contains(p) && std::holds_alternative<ParallelOutcome>(intersect(k, l));
        }
        a2.check(disjoint == 1 && m.contains(p) && parallel(m, l),
                 [&] { return Witness{"parallel not unique", {{"P", p}}, {{"l", l}}}; });
      }
    }
  } else {
    Sampler s(ring, stream(mode.seed, 1));
    const std::uint64_t n = count_or(mode, 0);
    for (std::uint64_t k = 0; k < n; ++k) {
      const Point p = s.point();
      Point q = s.point();
      while (q == p) q = s.point();
      const Line l = line_through(p, q);
      Point r = s.point_on(l);
      while (r == p) r = s.point_on(l);
      a1.check(l.contains(p) && l.contains(q) && line_through(q, p) == l && line_through(p, r) == l,
               [&] { return note_points("join not unique", {{"P", p}, {"Q", q}, {"R", r}}); });

      const Line base = s.line();
      const Point off = s.point_off(base);
      const Line m = parallel_through(off, base);
      const Point other = s.point_off(m);
      const Line cross = line_through(off, other);
      a2.check(m.contains(off) && parallel(m, base) &&
                   std::holds_alternative<ParallelOutcome>(intersect(m, base)) &&
                   std::holds_alternative<Point>(intersect(cross, base)),
               [&] { return Witness{"parallel not unique", {{"P", off}, {"R", other}}, {{"l", base}}}; });

      a3.check(!(l.at(Scalar::zero(ring)) == l.at(Scalar::one(ring))),
               [&] { return Witness{"line with one point", {}, {{"l", l}}}; });
    }
  }
  out.push_back(std::move(a1));
  out.push_back(std::move(a2));
  out.push_back(std::move(a3));
}

// -------------------------------------------------------------- configurations

void absorb(ClaimResult& c, const SearchReport& r) {
  c.tested += r.tested;
  c.failures += r.failure_count;
  for (const auto& w : r.failures) {
    if (c.witnesses.size() < ClaimResult::kMaxWitnesses) c.witnesses.push_back(w);
  }
}

std::uint64_t search_budget(const PlaneModel& model, ConfigKind kind, const RunMode& mode) {
  if (exhaustive(mode)) return exhaustive_candidate_count(model, kind);
  return count_or(mode, 0);
}

void desargues_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  ClaimResult c = claim("Desargues");
  if (!model.ring().finite()) {
    const auto fig = desargues_rail_example(model.ring());
    c.check(desargues_check(fig), [&] { return make_witness(fig, "rail figure"); });
  }
  absorb(c, configuration_search(model, ConfigKind::Desargues, search_budget(model, ConfigKind::Desargues, mode),
                                 stream(mode.seed, 2)));
  out.push_back(std::move(c));
}

void pappus_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  const auto ring = model.ring();
  ClaimResult pappus = claim("Pappus");
  if (!ring.finite()) {
    const auto fig = pappus_hexagon_example(ring);
    pappus.check(pappus_check(fig), [&] { return make_witness(fig, "hexagon figure"); });
    absorb(pappus, configuration_search(model, ConfigKind::Pappus, count_or(mode, 0), stream(mode.seed, 3)));
  } else {
    absorb(pappus, configuration_search(model, ConfigKind::Pappus, count_or(mode, 1000), stream(mode.seed, 3)));
  }

  ClaimResult affine = claim("affine-Pappus");
  {
    Sampler s(ring, stream(mode.seed, 4));
    const std::uint64_t n = count_or(mode, 1000);
    std::uint64_t attempts = 0;
    while (affine.tested < n && attempts < 20 * n) {
      ++attempts;
      const Line l1 = s.line();
      Line l2 = s.line();
      if (l1 == l2) continue;
      PappusConfig cfg{s.point_on(l1), s.point_on(l1), s.point_on(l1),
                       s.point_on(l2), s.point_on(l2), s.point_on(l2)};
      try {
        validate(cfg);
        const auto meets = pappus_intersections(cfg);
        if (meets.n == meets.l) continue;
        const Line axis = line_through(meets.n, meets.l);
        const bool lane = affine_pappus_check(cfg, axis);
        const bool hexagon = pappus_check(cfg);
        affine.check(lane == hexagon, [&] { return make_witness(cfg, "affine and hexagon forms disagree"); });
      } catch (const GeometryError&) {
        // hypotheses not met; draw again
      }
    }
  }

  ClaimResult teck = claim("Tecklenburg-GF(p)");
  if (ring.finite()) {
    const std::uint64_t budget = exhaustive(mode) ? exhaustive_candidate_count(model, ConfigKind::Pappus)
                                                  : count_or(mode, 0);
    absorb(teck, configuration_search(model, ConfigKind::Pappus, budget, stream(mode.seed, 5)));
  } else {
    teck = skipped("Tecklenburg-GF(p)", "requires a finite plane");
  }

  out.push_back(std::move(pappus));
  out.push_back(std::move(affine));
  out.push_back(std::move(teck));
  out.push_back(not_instantiable(
      "finite-ordered-Pappian",
      "a finite subplane of the real plane carrying this order cannot exist; covered by Tecklenburg-GF(p) "
      "(finite implies Pappian) and the positive-cone suite (ordered implies cone closure)"));
}

// ------------------------------------------------------------------- order

std::vector<Point> distinct_on(Sampler& s, const Line& l, std::size_t n) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p = s.point_on(l);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return pts;
}

void merge_into(std::vector<ClaimResult>& acc, const std::vector<ClaimResult>& part) {
  for (const auto& c : part) {
    auto it = std::find_if(acc.begin(), acc.end(), [&](const ClaimResult& a) { return a.claim == c.claim; });
    if (it == acc.end()) {
      acc.push_back(c);
    } else {
      it->merge(c);
    }
  }
}

void order_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  Sampler s(model.ring(), stream(mode.seed, 6));
  std::vector<ClaimResult> acc;
  const std::uint64_t n = count_or(mode, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    const Line l = s.line();
    const auto pts = distinct_on(s, l, 4);
    const std::array<std::array<Point, 4>, 1> quad{{{pts[0], pts[1], pts[2], pts[3]}}};
    merge_into(acc, check_order_axioms(l, quad).claims);
  }
  for (auto& c : acc) {
    const ClaimResult reg = claim(c.claim);
    c.anchor = reg.anchor;
    out.push_back(std::move(c));
  }
}

Frame random_frame(Sampler& s) {
  const Line l = s.line();
  const auto pts = distinct_on(s, l, 2);
  return Frame(l, pts[0], pts[1]);
}

void cone_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  const auto ring = model.ring();
  Sampler s(ring, stream(mode.seed, 7));
  const std::uint64_t n = count_or(mode, 0);
  std::vector<ClaimResult> acc;
  // A fresh frame every 50 samples keeps lines of every direction in play.
  for (std::uint64_t start = 0; start < n; start += 50) {
    const std::uint64_t chunk = std::min<std::uint64_t>(50, n - start);
    const Frame f = random_frame(s);
    ConeSamples cs;
    auto pos = [&] { return from_parameter(f, s.positive_rational()); };
    auto neg = [&] { return from_parameter(f, -s.positive_rational()); };
    for (std::uint64_t k = 0; k < chunk; ++k) {
      cs.positive_pairs.emplace_back(pos(), pos());
      if (k % 2 == 0) cs.positives.push_back(pos());
      cs.negative_pairs.emplace_back(neg(), neg());
    }
    merge_into(acc, check_positive_cone(f, cs, s.point_off(f.line())).claims);
  }
  for (auto& c : acc) {
    c.anchor = claim(c.claim).anchor;
    out.push_back(std::move(c));
  }
  out.push_back(not_instantiable(
      "finite-ordered-skew-field",
      "a finite ordered skew field contradicts cone closure in nonzero characteristic; covered by cone closure "
      "over Q and Tecklenburg-GF(p)"));
}

std::vector<std::array<Point, 3>> triples_on(Sampler& s, const Line& l, std::size_t n) {
  std::vector<std::array<Point, 3>> out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto p = distinct_on(s, l, 3);
    out.push_back({p[0], p[1], p[2]});
  }
  return out;
}

void map_order_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  const auto ring = model.ring();
  Sampler s(ring, stream(mode.seed, 8));
  const std::uint64_t n = count_or(mode, 0);

  ClaimResult proj = claim("projection-order");
  ClaimResult bij = claim("projection-bijection");
  const std::uint64_t projections = std::max<std::uint64_t>(1, n / 5);
  for (std::uint64_t k = 0; k < projections; ++k) {
    const Line src = s.line();
    Line dst = s.line();
    while (dst == src) dst = s.line();
    Line dir = s.line();
    while (parallel(dir, src) || parallel(dir, dst)) dir = s.line();
    const ParallelProjection pp(src, dst, dir);
    const auto triples = triples_on(s, src, 5);
    const OrderReport r = check_map_order(pp, triples);
    // One projection is one instance: a mixed orientation fails it once.
    const bool ok = r.passed();
    proj.check(ok, [&] {
      return r.claims.front().witnesses.empty() ? Witness{"mixed orientation", {}, {{"source", src}, {"target", dst}}}
                                                 : r.claims.front().witnesses.front();
    });
    bij.check(projection_is_bijection(pp, model, stream(mode.seed, 100 + k)),
              [&] { return Witness{"not a bijection", {}, {{"source", src}, {"target", dst}, {"direction", dir}}}; });
  }

  ClaimResult direct = claim("translation-order");
  ClaimResult staged = claim("translation-order-staged");
  ClaimResult image = claim("translation-image");
  const std::uint64_t translations = std::max<std::uint64_t>(1, n / 2);
  for (std::uint64_t k = 0; k < translations; ++k) {
    const Line l = s.line();
    Translation t = Translation::identity(ring);
    if (k % 2 == 0) {
      // along l: exercises the two-stage split
      const auto pts = distinct_on(s, l, 2);
      t = translation_from(pts[0], pts[1]);
    } else {
      do {
        t = Translation(s.scalar(), s.scalar());
      } while (t.is_identity() || moves_along(t, l));
    }
    const auto triples = triples_on(s, l, 5);
    const OrderReport r = check_map_order(t, l, triples);
    for (const auto& c : r.claims) {
      if (c.claim == direct.claim) direct.merge(c);
      if (c.claim == staged.claim) staged.merge(c);
    }
    const Point p = s.point();
    image.check(parallel(apply_translation(t, l), l) && !(apply_translation(t, p) == p),
                [&] { return Witness{"image not parallel or fixed point", {{"P", p}}, {{"l", l}}}; });
  }

  out.push_back(std::move(proj));
  out.push_back(std::move(bij));
  out.push_back(std::move(direct));
  out.push_back(std::move(staged));
  out.push_back(std::move(image));
}

// -------------------------------------------------------------- skew field

struct Ops {
  const Frame& f;
  Point b;
  Point add(const Point& a, const Point& c) const { return point_add(f, a, c, b); }
  Point mul(const Point& a, const Point& c) const { return point_mul(f, a, c, b); }
  Point neg(const Point& a) const { return point_neg(f, a, b); }
};

Witness ops_witness(std::string note, const Frame& f, std::vector<std::pair<std::string, Point>> pts) {
  Witness w{std::move(note), std::move(pts), {{"frame", f.line()}}};
  w.points.emplace_back("O", f.origin());
  w.points.emplace_back("I", f.unit());
  return w;
}

void skew_field_suite(const PlaneModel& model, const RunMode& mode, std::vector<ClaimResult>& out) {
  const auto ring = model.ring();
  Sampler s(ring, stream(mode.seed, 9));
  const Frame f = exhaustive(mode) ? Frame::standard(ring) : random_frame(s);
  const Ops op{f, choose_auxiliary(f, 0)};
  const Point& o = f.origin();
  const Point& i = f.unit();

  ClaimResult add_assoc = claim("add-assoc"), mul_assoc = claim("mul-assoc"), add_comm = claim("add-comm"),
              dl = claim("distrib-left"), dr = claim("distrib-right"), n0 = claim("neutral-O"),
              n1 = claim("neutral-I"), ainv = claim("add-inverse"), minv = claim("mul-inverse"),
              comm = claim("mul-commutativity"), oracle = claim("oracle-agreement"),
              bind = claim("B-independence");

  auto triple = [&](const Point& a, const Point& c, const Point& e) {
    add_assoc.check(op.add(op.add(a, c), e) == op.add(a, op.add(c, e)),
                    [&] { return ops_witness("(A+C)+E != A+(C+E)", f, {{"A", a}, {"C", c}, {"E", e}}); });
    mul_assoc.check(op.mul(op.mul(a, c), e) == op.mul(a, op.mul(c, e)),
                    [&] { return ops_witness("(A*C)*E != A*(C*E)", f, {{"A", a}, {"C", c}, {"E", e}}); });
    dl.check(op.mul(a, op.add(c, e)) == op.add(op.mul(a, c), op.mul(a, e)),
             [&] { return ops_witness("A*(C+E) != A*C+A*E", f, {{"A", a}, {"C", c}, {"E", e}}); });
    dr.check(op.mul(op.add(a, c), e) == op.add(op.mul(a, e), op.mul(c, e)),
             [&] { return ops_witness("(A+C)*E != A*E+C*E", f, {{"A", a}, {"C", c}, {"E", e}}); });
  };
  auto pair = [&](const Point& a, const Point& c) {
    const Point sum = op.add(a, c);
    const Point prod = op.mul(a, c);
    add_comm.check(sum == op.add(c, a), [&] { return ops_witness("A+C != C+A", f, {{"A", a}, {"C", c}}); });
    if (ring.commutative()) {
      comm.check(prod == op.mul(c, a), [&] { return ops_witness("A*C != C*A", f, {{"A", a}, {"C", c}}); });
    }
    const Scalar ta = to_parameter(f, a), tc = to_parameter(f, c);
    oracle.check(to_parameter(f, sum) == ta + tc && to_parameter(f, prod) == ta * tc,
                 [&] { return ops_witness("parameter does not intertwine", f, {{"A", a}, {"C", c}}); });
  };
  auto single = [&](const Point& a) {
    n0.check(op.add(a, o) == a && op.add(o, a) == a, [&] { return ops_witness("O not neutral", f, {{"A", a}}); });
    n1.check(op.mul(a, i) == a && op.mul(i, a) == a, [&] { return ops_witness("I not neutral", f, {{"A", a}}); });
    const Point na = op.neg(a);
    ainv.check(op.add(a, na) == o && op.add(na, a) == o, [&] { return ops_witness("-A not inverse", f, {{"A", a}, {"-A", na}}); });
  };
  auto inverse = [&](const Point& a) {
    const Point r = point_inv(f, a, Side::Right, op.b);
    const Point l = point_inv(f, a, Side::Left, op.b);
    minv.check(r == l && op.mul(a, r) == i && op.mul(r, a) == i,
               [&] { return ops_witness("inverse not two-sided", f, {{"A", a}, {"right", r}, {"left", l}}); });
  };
  auto b_pair = [&](const Point& a, const Point& c, const Point& b1, const Point& b2) {
    bind.check(point_add(f, a, c, b1) == point_add(f, a, c, b2) && point_mul(f, a, c, b1) == point_mul(f, a, c, b2),
               [&] { return ops_witness("result depends on B", f, {{"A", a}, {"C", c}, {"B1", b1}, {"B2", b2}}); });
  };

  if (exhaustive(mode)) {
    std::vector<Point> elems;
    for (const auto& t : model.elements()) elems.push_back(from_parameter(f, t));
    for (const auto& a : elems) {
      single(a);
      if (a != o) inverse(a);
      for (const auto& c : elems) {
        pair(a, c);
        for (const auto& e : elems) triple(a, c, e);
      }
    }
    std::vector<Point> off;
    for (const auto& p : model.enumerate_points()) {
      if (!f.line().contains(p)) off.push_back(p);
    }
    for (const auto& a : elems) {
      for (const auto& c : elems) {
        for (const auto& b : off) b_pair(a, c, op.b, b);
      }
    }
  } else {
    const std::uint64_t n = count_or(mode, 0);
    auto elem = [&] { return from_parameter(f, s.scalar()); };
    for (std::uint64_t k = 0; k < n; ++k) {
      const Point a = elem(), c = elem(), e = elem();
      triple(a, c, e);
      pair(a, c);
      single(a);
      inverse(from_parameter(f, s.nonzero_scalar()));
      b_pair(a, c, s.point_off(f.line()), s.point_off(f.line()));
    }
  }

  if (!ring.commutative()) {
    // i*j = k and j*i = -k on the standard frame: the geometric witness of
    // noncommutativity.
    const Frame sf = Frame::standard(ring);
    const Point b = choose_auxiliary(sf, 0);
    auto q = [&](int a, int bi, int cj, int dk) {
      return Point{Scalar::quaternion(a, bi, cj, dk), Scalar::zero(ring)};
    };
    const Point qi = q(0, 1, 0, 0), qj = q(0, 0, 1, 0), qk = q(0, 0, 0, 1), qmk = q(0, 0, 0, -1);
    const Point ij = point_mul(sf, qi, qj, b), ji = point_mul(sf, qj, qi, b);
    comm.check(ij == qk && ji == qmk, [&] {
      return ops_witness("i*j, j*i", sf, {{"i*j", ij}, {"j*i", ji}});
    });
  }

  ClaimResult tables = claim("cayley-tables");
  if (ring.finite()) {
    const auto t = cayley_tables(Frame::standard(ring));
    const std::size_t p = ring.modulus();
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) {
        tables.check(t.add[r][c] == (r + c) % p && t.mul[r][c] == (r * c) % p, [&] {
          return ops_witness("table entry", Frame::standard(ring), {{"row", t.elements[r]}, {"col", t.elements[c]}});
        });
      }
    }
  } else {
    tables = skipped("cayley-tables", "requires a finite plane");
  }

  ClaimResult frames = frame_independence_check(model, mode).checks.front();

  for (auto* c : {&add_assoc, &mul_assoc, &add_comm, &dl, &dr, &n0, &n1, &ainv, &minv, &comm, &oracle, &bind,
                  &frames, &tables}) {
    out.push_back(std::move(*c));
  }
}

using SuiteFn = void (*)(const PlaneModel&, const RunMode&, std::vector<ClaimResult>&);

SuiteFn suite_fn(std::string_view name) {
  if (name == "affine-axioms") return affine_suite;
  if (name == "desargues") return desargues_suite;
  if (name == "pappus") return pappus_suite;
  if (name == "order-axioms") return order_suite;
  if (name == "skew-field") return skew_field_suite;
  if (name == "positive-cone") return cone_suite;
  if (name == "map-order") return map_order_suite;
  return nullptr;
}

void frame_pair(const Frame& f1, const Frame& f2, const std::vector<Scalar>& params, ClaimResult& c) {
  const Point b1 = choose_auxiliary(f1, 0), b2 = choose_auxiliary(f2, 0);
  auto phi = [&](const Point& p) { return from_parameter(f2, to_parameter(f1, p)); };
  const bool units = phi(f1.origin()) == f2.origin() && phi(f1.unit()) == f2.unit();
  for (std::size_t k = 0; k + 1 < params.size(); k += 2) {
    const Point a = from_parameter(f1, params[k]);
    const Point e = from_parameter(f1, params[k + 1]);
    const bool ok = units && phi(point_add(f1, a, e, b1)) == point_add(f2, phi(a), phi(e), b2) &&
                    phi(point_mul(f1, a, e, b1)) == point_mul(f2, phi(a), phi(e), b2);
    c.check(ok, [&] {
      Witness w = ops_witness("parameter transport is not a homomorphism", f1, {{"A", a}, {"C", e}});
      w.points.emplace_back("O'", f2.origin());
      w.points.emplace_back("I'", f2.unit());
      w.lines.emplace_back("frame'", f2.line());
      return w;
    });
  }
}

}  // namespace

void check_compatible(std::string_view suite, const RingDescriptor& ring, const RunMode& mode) {
  if (!suite_fn(suite)) {
    throw GeometryError(ErrorKind::SuiteModelMismatch, "unknown suite '" + std::string(suite) + "'");
  }
  if (needs_order(suite) && !ring.ordered()) {
    throw GeometryError(ErrorKind::SuiteModelMismatch,
                        std::string(suite) + " needs an ordered model; " + ring.name() + " has no order");
  }
  if (exhaustive(mode) && !ring.finite()) {
    throw GeometryError(ErrorKind::SuiteModelMismatch,
                        "exhaustive mode needs a finite model; " + ring.name() + " is infinite");
  }
}

SuiteReport run_suite(std::string_view suite, const PlaneModel& model, const RunMode& mode) {
  check_compatible(suite, model.ring(), mode);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{std::string(suite), model.ring(), mode, {}, 0};
  suite_fn(suite)(model, mode, report.checks);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_all(const PlaneModel& model, const RunMode& mode) {
  std::vector<SuiteReport> reports;
  for (const auto& name : suite_names()) {
    try {
      reports.push_back(run_suite(name, model, mode));
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::SuiteModelMismatch) throw;
      SuiteReport r{name, model.ring(), mode, {}, 0};
      for (const auto& info : claim_registry()) {
        if (info.suite == name) r.checks.push_back(skipped(info.id, e.detail()));
      }
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

SuiteReport frame_independence_check(const PlaneModel& model, const RunMode& mode) {
  const auto ring = model.ring();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"frame-independence", ring, mode, {}, 0};
  ClaimResult c = claim("frame-independence");

  if (exhaustive(mode)) {
    check_compatible("skew-field", ring, mode);
    const auto elems = model.elements();
    std::vector<Scalar> params;  // every ordered pair of parameters
    for (const auto& a : elems) {
      for (const auto& e : elems) {
        params.push_back(a);
        params.push_back(e);
      }
    }
    const Line l = Frame::standard(ring).line();
    const auto pts = model.points_on(l);
    std::vector<Frame> frames;
    for (const auto& o : pts) {
      for (const auto& i : pts) {
        if (!(o == i)) frames.emplace_back(l, o, i);
      }
    }
    if (ring.modulus() <= 7) {
      for (const auto& f1 : frames) {
        for (const auto& f2 : frames) frame_pair(f1, f2, params, c);
      }
    } else {
      for (const auto& f2 : frames) frame_pair(Frame::standard(ring), f2, params, c);
    }
  } else {
    Sampler s(ring, stream(mode.seed, 10));
    const std::uint64_t n = count_or(mode, 0);
    for (std::uint64_t start_k = 0; start_k < n; start_k += 10) {
      const std::uint64_t chunk = std::min<std::uint64_t>(10, n - start_k);
      const Frame f1 = random_frame(s);
      const Frame f2 = random_frame(s);
      std::vector<Scalar> params;
      for (std::uint64_t k = 0; k < 2 * chunk; ++k) params.push_back(s.scalar());
      frame_pair(f1, f2, params, c);
    }
  }
  report.checks.push_back(std::move(c));
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace skewline
