#pragma once

#include <cstdint>
#include <vector>

#include "skewline/plane.hpp"
#include "skewline/report.hpp"

namespace skewline {

// Two triangles ABC and A'B'C' whose corresponding vertices sit on three
// parallel rails.
struct DesarguesConfig {
  Point a, b, c;
  Point a2, b2, c2;  // A', B', C'
  Line rail_a, rail_b, rail_c;
};

// E, C, A on one line and B, F, D on another.
struct PappusConfig {
  Point e, c, a;
  Point b, f, d;
};

// n = CB ∩ EF, l = AF ∩ CD, m = AB ∩ ED.
struct PappusIntersections {
  Point n, l, m;
};

// Throws InvalidConfiguration naming the first hypothesis that fails.
void validate(const DesarguesConfig& cfg);
// True iff AC ∥ A'C'. Hypothesis violations throw rather than return false.
bool desargues_check(const DesarguesConfig& cfg);

// Throws InvalidConfiguration when the six points are not two distinct
// collinear triples of mutually distinct points off the lines' meet.
void validate(const PappusConfig& cfg);
// Throws DegenerateHexagon if a cross-join pair is parallel.
PappusIntersections pappus_intersections(const PappusConfig& cfg);
bool pappus_check(const PappusConfig& cfg);

// Lane's form: given that CB∩EF and AF∩CD lie on `axis`, decides whether
// AB∩ED does too. When AB ∥ ED the meet is taken at infinity, i.e. the
// result is whether AB ∥ axis. Any unmet precondition throws HypothesisNotMet.
bool affine_pappus_check(const PappusConfig& cfg, const Line& axis);

// Triangles A(0,-1) B(2,0) C(4,-1) and A'(0,1) B'(2,2) C'(4,1) on the rails
// x = 0, 2, 4.
DesarguesConfig desargues_rail_example(const RingDescriptor& ring);
// E(1,12/5) C(5/2,3) A(4,18/5) on y = x*2/5 + 2 and B(1,-2/5) F(5/2,-1)
// D(4,-8/5) on y = x*(-2/5); N, L, M land on y = 1.
PappusConfig pappus_hexagon_example(const RingDescriptor& ring);

Witness make_witness(const DesarguesConfig& cfg, std::string note);
Witness make_witness(const PappusConfig& cfg, std::string note);

enum class ConfigKind { Desargues, Pappus };

std::string_view config_kind_name(ConfigKind kind);

struct SearchReport {
  ConfigKind kind = ConfigKind::Pappus;
  RingDescriptor ring = RingDescriptor::rational();
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool exhaustive = false;
  std::uint64_t tested = 0;
  std::uint64_t rejected = 0;
  std::uint64_t failure_count = 0;
  std::vector<Witness> failures;  // capped at ClaimResult::kMaxWitnesses
};

// Number of candidate configurations an exhaustive pass over a finite plane
// visits; nullopt-like 0 for infinite rings.
std::uint64_t exhaustive_candidate_count(const PlaneModel& model, ConfigKind kind);

// Deterministic for a fixed seed. Finite planes whose candidate count fits in
// the budget are enumerated exhaustively; otherwise `budget` random
// candidates are drawn and invalid ones counted as rejected.
SearchReport configuration_search(const PlaneModel& model, ConfigKind kind, std::uint64_t budget,
                                  std::uint64_t seed);

}  // namespace skewline
