#include "skewline/configurations.hpp"

#include <functional>

#include "skewline/sampling.hpp"

namespace skewline {

namespace {

[[noreturn]] void invalid(const std::string& clause) {
  throw GeometryError(ErrorKind::InvalidConfiguration, clause);
}

[[noreturn]] void unmet(const std::string& clause) {
  throw GeometryError(ErrorKind::HypothesisNotMet, clause);
}

Line join_or(const Point& p, const Point& q, void (*fail)(const std::string&), const char* what) {
  if (p == q) fail(std::string(what) + " is undefined: points coincide");
  return line_through(p, q);
}

const Point* meet_point(const Meet& m) { return std::get_if<Point>(&m); }

bool mutually_distinct(const std::vector<const Point*>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (*pts[i] == *pts[j]) return false;
    }
  }
  return true;
}

std::vector<const Point*> six(const PappusConfig& cfg) {
  return {&cfg.e, &cfg.c, &cfg.a, &cfg.b, &cfg.f, &cfg.d};
}

Point cross(const Point& p1, const Point& q1, const Point& p2, const Point& q2, const char* name) {
  auto m = intersect(line_through(p1, q1), line_through(p2, q2));
  if (const Point* p = meet_point(m)) return *p;
  throw GeometryError(ErrorKind::DegenerateHexagon, std::string(name) + " cross-joins are parallel");
}

// Builds the unique completion A'B'C' of a triangle on rails from A'.
DesarguesConfig complete_desargues(const Line& ra, const Line& rb, const Line& rc, const Point& a,
                                   const Point& b, const Point& c, const Point& a2) {
  Line ab = line_through(a, b);
  Line bc = line_through(b, c);
  Point b2 = std::get<Point>(intersect(parallel_through(a2, ab), rb));
  Point c2 = std::get<Point>(intersect(parallel_through(b2, bc), rc));
  return {a, b, c, a2, b2, c2, ra, rb, rc};
}

template <typename T>
std::vector<std::vector<T>> ordered_triples(const std::vector<T>& items) {
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (k == i || k == j) continue;
        out.push_back({items[i], items[j], items[k]});
      }
    }
  }
  return out;
}

void for_each_desargues(const PlaneModel& model, const std::function<void(const DesarguesConfig&)>& fn) {
  auto lines = model.enumerate_lines();
  // group lines into parallel classes
  std::vector<std::vector<Line>> classes;
  for (const auto& l : lines) {
    bool placed = false;
    for (auto& cls : classes) {
      if (parallel(cls.front(), l)) {
        cls.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({l});
  }
  for (const auto& cls : classes) {
    for (const auto& rails : ordered_triples(cls)) {
      auto pa = model.points_on(rails[0]);
      auto pb = model.points_on(rails[1]);
      auto pc = model.points_on(rails[2]);
      for (const auto& a : pa) {
        for (const auto& b : pb) {
          for (const auto& c : pc) {
            for (const auto& a2 : pa) fn(complete_desargues(rails[0], rails[1], rails[2], a, b, c, a2));
          }
        }
      }
    }
  }
}

void for_each_pappus(const PlaneModel& model, const std::function<void(const PappusConfig&)>& fn) {
  auto lines = model.enumerate_lines();
  for (const auto& l1 : lines) {
    for (const auto& l2 : lines) {
      if (l1 == l2) continue;
      const Point* corner = nullptr;
      auto m = intersect(l1, l2);
      corner = meet_point(m);
      auto usable = [&](const Line& l) {
        std::vector<Point> pts;
        for (auto& p : model.points_on(l)) {
          if (!corner || !(p == *corner)) pts.push_back(std::move(p));
        }
        return ordered_triples(pts);
      };
      auto first = usable(l1);
      auto second = usable(l2);
      for (const auto& t1 : first) {
        for (const auto& t2 : second) fn(PappusConfig{t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]});
      }
    }
  }
}

std::uint64_t falling3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2); }

}  // namespace

void validate(const DesarguesConfig& cfg) {
  if (!parallel(cfg.rail_a, cfg.rail_b) || !parallel(cfg.rail_b, cfg.rail_c)) {
    invalid("rails are not parallel");
  }
  if (cfg.rail_a == cfg.rail_b || cfg.rail_b == cfg.rail_c || cfg.rail_a == cfg.rail_c) {
    invalid("rails are not pairwise distinct");
  }
  if (!cfg.rail_a.contains(cfg.a) || !cfg.rail_a.contains(cfg.a2)) invalid("A or A' off rail k");
  if (!cfg.rail_b.contains(cfg.b) || !cfg.rail_b.contains(cfg.b2)) invalid("B or B' off rail l");
  if (!cfg.rail_c.contains(cfg.c) || !cfg.rail_c.contains(cfg.c2)) invalid("C or C' off rail m");
  if (cfg.a == cfg.c) invalid("A = C");
  if (cfg.a2 == cfg.c2) invalid("A' = C'");
  Line ab = join_or(cfg.a, cfg.b, invalid, "AB");
  Line bc = join_or(cfg.b, cfg.c, invalid, "BC");
  Line ab2 = join_or(cfg.a2, cfg.b2, invalid, "A'B'");
  Line bc2 = join_or(cfg.b2, cfg.c2, invalid, "B'C'");
  if (ab == cfg.rail_b) invalid("AB coincides with rail l");
  if (bc == cfg.rail_b) invalid("BC coincides with rail l");
  if (!parallel(ab, ab2)) invalid("A'B' is not parallel to AB");
  if (!parallel(bc, bc2)) invalid("B'C' is not parallel to BC");
}

bool desargues_check(const DesarguesConfig& cfg) {
  validate(cfg);
  return parallel(line_through(cfg.a, cfg.c), line_through(cfg.a2, cfg.c2));
}

void validate(const PappusConfig& cfg) {
  if (!mutually_distinct(six(cfg))) invalid("the six points are not mutually distinct");
  Line first = line_through(cfg.e, cfg.a);
  Line second = line_through(cfg.b, cfg.d);
  if (!first.contains(cfg.c)) invalid("E, C, A are not collinear");
  if (!second.contains(cfg.f)) invalid("B, F, D are not collinear");
  if (first == second) invalid("both triples lie on one line");
  const Meet corner_meet = intersect(first, second);
  if (const Point* corner = meet_point(corner_meet)) {
    for (const Point* p : six(cfg)) {
      if (*p == *corner) invalid("a point lies on both lines");
    }
  }
}

PappusIntersections pappus_intersections(const PappusConfig& cfg) {
  validate(cfg);
  return {cross(cfg.c, cfg.b, cfg.e, cfg.f, "CB/EF"), cross(cfg.a, cfg.f, cfg.c, cfg.d, "AF/CD"),
          cross(cfg.a, cfg.b, cfg.e, cfg.d, "AB/ED")};
}

bool pappus_check(const PappusConfig& cfg) {
  auto x = pappus_intersections(cfg);
  return collinear(x.n, x.l, x.m);
}

bool affine_pappus_check(const PappusConfig& cfg, const Line& axis) {
  try {
    validate(cfg);
  } catch (const GeometryError& e) {
    unmet(e.detail());
  }
  Line first = line_through(cfg.e, cfg.a);
  Line second = line_through(cfg.b, cfg.d);
  if (axis == first || axis == second) unmet("axis coincides with a carrier line");
  std::vector<Point> corners;
  for (const auto& m : {intersect(first, second), intersect(second, axis), intersect(axis, first)}) {
    if (const Point* p = meet_point(m)) corners.push_back(*p);
  }
  for (const Point* p : six(cfg)) {
    for (const auto& corner : corners) {
      if (*p == corner) unmet("a hexagon vertex lies on a pairwise meet of the three lines");
    }
  }
  auto on_axis = [&](const Point& p1, const Point& q1, const Point& p2, const Point& q2, const char* name) {
    const Meet m = intersect(line_through(p1, q1), line_through(p2, q2));
    const Point* p = meet_point(m);
    if (!p || !axis.contains(*p)) unmet(std::string(name) + " does not meet on the axis");
  };
  on_axis(cfg.c, cfg.b, cfg.e, cfg.f, "CB/EF");
  on_axis(cfg.a, cfg.f, cfg.c, cfg.d, "AF/CD");
  Line ab = line_through(cfg.a, cfg.b);
  auto m = intersect(ab, line_through(cfg.e, cfg.d));
  if (const Point* p = meet_point(m)) return axis.contains(*p);
  return parallel(ab, axis);
}

namespace {

Scalar frac(const RingDescriptor& ring, long long n, long long d) {
  return Scalar::from_int(ring, n) * Scalar::from_int(ring, d).inverse();
}

Point pt(const RingDescriptor& ring, long long xn, long long xd, long long yn, long long yd) {
  return {frac(ring, xn, xd), frac(ring, yn, yd)};
}

}  // namespace

DesarguesConfig desargues_rail_example(const RingDescriptor& ring) {
  auto s = [&](long long n) { return Scalar::from_int(ring, n); };
  return {pt(ring, 0, 1, -1, 1), pt(ring, 2, 1, 0, 1), pt(ring, 4, 1, -1, 1),
          pt(ring, 0, 1, 1, 1),  pt(ring, 2, 1, 2, 1), pt(ring, 4, 1, 1, 1),
          Line::vertical(s(0)),  Line::vertical(s(2)), Line::vertical(s(4))};
}

PappusConfig pappus_hexagon_example(const RingDescriptor& ring) {
  return {pt(ring, 1, 1, 12, 5), pt(ring, 5, 2, 3, 1), pt(ring, 4, 1, 18, 5),
          pt(ring, 1, 1, -2, 5), pt(ring, 5, 2, -1, 1), pt(ring, 4, 1, -8, 5)};
}

Witness make_witness(const DesarguesConfig& cfg, std::string note) {
  return Witness{std::move(note),
                 {{"A", cfg.a}, {"B", cfg.b}, {"C", cfg.c}, {"A'", cfg.a2}, {"B'", cfg.b2}, {"C'", cfg.c2}},
                 {{"rail_k", cfg.rail_a}, {"rail_l", cfg.rail_b}, {"rail_m", cfg.rail_c}}};
}

Witness make_witness(const PappusConfig& cfg, std::string note) {
  Witness w{std::move(note),
            {{"E", cfg.e}, {"C", cfg.c}, {"A", cfg.a}, {"B", cfg.b}, {"F", cfg.f}, {"D", cfg.d}},
            {}};
  try {
    auto x = pappus_intersections(cfg);
    w.points.emplace_back("N", x.n);
    w.points.emplace_back("L", x.l);
    w.points.emplace_back("M", x.m);
  } catch (const GeometryError&) {
  }
  return w;
}

std::string_view config_kind_name(ConfigKind kind) {
  return kind == ConfigKind::Desargues ? "desargues" : "pappus";
}

std::uint64_t exhaustive_candidate_count(const PlaneModel& model, ConfigKind kind) {
  if (!model.ring().finite()) return 0;
  const std::uint64_t p = model.ring().modulus();
  if (kind == ConfigKind::Desargues) return (p + 1) * falling3(p) * p * p * p * p;
  const std::uint64_t lines = p * p + p;
  const std::uint64_t parallel_pairs = (p + 1) * p * (p - 1);
  const std::uint64_t crossing_pairs = lines * (lines - 1) - parallel_pairs;
  return parallel_pairs * falling3(p) * falling3(p) + crossing_pairs * falling3(p - 1) * falling3(p - 1);
}

SearchReport configuration_search(const PlaneModel& model, ConfigKind kind, std::uint64_t budget,
                                  std::uint64_t seed) {
  SearchReport report;
  report.kind = kind;
  report.ring = model.ring();
  report.seed = seed;
  report.budget = budget;
  const std::uint64_t total = exhaustive_candidate_count(model, kind);
  report.exhaustive = model.ring().finite() && total <= budget;

  auto record_failure = [&report](Witness w) {
    ++report.failure_count;
    if (report.failures.size() < ClaimResult::kMaxWitnesses) report.failures.push_back(std::move(w));
  };
  auto run_desargues = [&](const DesarguesConfig& cfg) {
    try {
      if (desargues_check(cfg)) {
        ++report.tested;
      } else {
        ++report.tested;
        record_failure(make_witness(cfg, "AC is not parallel to A'C'"));
      }
    } catch (const GeometryError&) {
      ++report.rejected;
    }
  };
  auto run_pappus = [&](const PappusConfig& cfg) {
    try {
      bool ok = pappus_check(cfg);
      ++report.tested;
      if (!ok) record_failure(make_witness(cfg, "N, L, M are not collinear"));
    } catch (const GeometryError&) {
      ++report.rejected;
    }
  };

  if (report.exhaustive) {
    if (kind == ConfigKind::Desargues) {
      for_each_desargues(model, run_desargues);
    } else {
      for_each_pappus(model, run_pappus);
    }
    return report;
  }

  Sampler sampler(model.ring(), seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    if (kind == ConfigKind::Desargues) {
      Line ra = sampler.line();
      Line rb = parallel_through(sampler.point_off(ra), ra);
      Line rc = parallel_through(sampler.point(), ra);
      if (rc == ra || rc == rb) {
        ++report.rejected;
        continue;
      }
      Point a = sampler.point_on(ra);
      Point b = sampler.point_on(rb);
      Point c = sampler.point_on(rc);
      Point a2 = sampler.point_on(ra);
      run_desargues(complete_desargues(ra, rb, rc, a, b, c, a2));
    } else {
      Line l1 = sampler.line();
      Line l2 = sampler.line();
      if (l1 == l2) {
        ++report.rejected;
        continue;
      }
      run_pappus(PappusConfig{sampler.point_on(l1), sampler.point_on(l1), sampler.point_on(l1),
                              sampler.point_on(l2), sampler.point_on(l2), sampler.point_on(l2)});
    }
  }
  return report;
}

}  // namespace skewline
