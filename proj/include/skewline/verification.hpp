#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewline/plane.hpp"
#include "skewline/report.hpp"

namespace skewline {

enum class ModeKind { Exhaustive, Sampled };

struct RunMode {
  ModeKind kind = ModeKind::Sampled;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;

  static RunMode exhaustive() { return {ModeKind::Exhaustive, 0, 0}; }
  static RunMode sampled(std::uint64_t seed, std::uint64_t samples) {
    return {ModeKind::Sampled, seed, samples};
  }
};

struct SuiteReport {
  std::string suite;
  RingDescriptor ring = RingDescriptor::rational();
  RunMode mode;
  std::vector<ClaimResult> checks;  // in registry order
  double wall_time_ms = 0;

  bool passed() const { return all_ok(checks); }
  const ClaimResult* find(std::string_view claim) const;
};

struct ClaimInfo {
  std::string id;
  std::string suite;
  std::string anchor;
};

// Every claim the suites execute, each owned by exactly one suite.
const std::vector<ClaimInfo>& claim_registry();
const std::vector<std::string>& suite_names();

// Throws SuiteModelMismatch for unknown suites, order suites on unordered
// rings, and exhaustive runs on infinite rings.
void check_compatible(std::string_view suite, const RingDescriptor& ring, const RunMode& mode);

SuiteReport run_suite(std::string_view suite, const PlaneModel& model, const RunMode& mode);

// Runs every suite; incompatible ones come back with all claims Skipped.
std::vector<SuiteReport> run_all(const PlaneModel& model, const RunMode& mode);

// Parameter transport between two frames must be an isomorphism of the
// constructed skew fields. Exhaustive mode walks all frame pairs on the
// standard line (p <= 7; larger fields anchor one side at the standard frame).
SuiteReport frame_independence_check(const PlaneModel& model, const RunMode& mode);

}  // namespace skewline
