#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skewline/verification.hpp"

using namespace skewline;

namespace {

const RingDescriptor kQ = RingDescriptor::rational();

ErrorKind mismatch_kind(std::string_view suite, const RingDescriptor& ring, const RunMode& mode) {
  try {
    run_suite(suite, PlaneModel(ring), mode);
  } catch (const GeometryError& e) {
    return e.kind();
  }
  return ErrorKind::InvalidRing;
}

}  // namespace

TEST(Registry, EveryClaimBelongsToExactlyOneSuite) {
  std::map<std::string, std::string> owner;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(owner.emplace(c.id, c.suite).second) << c.id << " registered twice";
    EXPECT_FALSE(c.anchor.empty()) << c.id;
  }
  const auto& suites = suite_names();
  for (const auto& [id, suite] : owner) {
    EXPECT_NE(std::find(suites.begin(), suites.end(), suite), suites.end()) << id;
  }
  for (const char* id : {"Lo.1", "Lo.2", "Lo.3", "Lo.4", "Desargues", "Pappus", "Tecklenburg-GF(p)", "add-closure",
                         "mul-commutativity", "B-independence", "frame-independence", "projection-order"}) {
    EXPECT_TRUE(owner.count(id)) << id;
  }
}

TEST(Registry, SuiteReportsFollowRegistryOrder) {
  for (const auto& suite : suite_names()) {
    const SuiteReport r = run_suite(suite, PlaneModel(kQ), RunMode::sampled(1, 20));
    std::vector<std::string> expect;
    for (const auto& c : claim_registry()) {
      if (c.suite == suite) expect.push_back(c.id);
    }
    std::vector<std::string> got;
    for (const auto& c : r.checks) got.push_back(c.claim);
    EXPECT_EQ(got, expect) << suite;
  }
}

TEST(Compatibility, Mismatches) {
  EXPECT_EQ(mismatch_kind("order-axioms", RingDescriptor::prime_field(5), RunMode::sampled(1, 10)),
            ErrorKind::SuiteModelMismatch);
  EXPECT_EQ(mismatch_kind("positive-cone", RingDescriptor::quaternion(), RunMode::sampled(1, 10)),
            ErrorKind::SuiteModelMismatch);
  EXPECT_EQ(mismatch_kind("skew-field", kQ, RunMode::exhaustive()), ErrorKind::SuiteModelMismatch);
  EXPECT_EQ(mismatch_kind("no-such-suite", kQ, RunMode::sampled(1, 10)), ErrorKind::SuiteModelMismatch);
  EXPECT_NO_THROW(check_compatible("pappus", RingDescriptor::quaternion(), RunMode::sampled(1, 10)));
}

TEST(Suites, SkewFieldExhaustiveGF5) {
  const SuiteReport r = run_suite("skew-field", PlaneModel(RingDescriptor::prime_field(5)), RunMode::exhaustive());
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.find("add-assoc"), nullptr);
  EXPECT_EQ(r.find("add-assoc")->tested, 125u);
  EXPECT_EQ(r.find("mul-assoc")->tested, 125u);
  EXPECT_EQ(r.find("cayley-tables")->failures, 0u);
  EXPECT_EQ(r.find("mul-commutativity")->status(), ClaimStatus::Pass);
}

TEST(Suites, SkewFieldQuaternionsAreNotCommutative) {
  const SuiteReport r = run_suite("skew-field", PlaneModel(RingDescriptor::quaternion()), RunMode::sampled(2, 50));
  EXPECT_TRUE(r.passed());
  const ClaimResult* comm = r.find("mul-commutativity");
  ASSERT_NE(comm, nullptr);
  EXPECT_EQ(comm->failures, 0u);
  EXPECT_GT(comm->tested, 0u);
  EXPECT_GT(r.find("mul-assoc")->tested, 0u);
}

TEST(Suites, PositiveConeRational) {
  const SuiteReport r = run_suite("positive-cone", PlaneModel(kQ), RunMode::sampled(1, 1000));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("add-closure")->tested, 1000u);
  EXPECT_EQ(r.find("finite-ordered-skew-field")->status(), ClaimStatus::NotInstantiable);
}

TEST(Suites, PappusTecklenburgExhaustiveGF3) {
  const SuiteReport r = run_suite("pappus", PlaneModel(RingDescriptor::prime_field(3)), RunMode::exhaustive());
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.find("Tecklenburg-GF(p)")->tested, 0u);
  EXPECT_EQ(r.find("Tecklenburg-GF(p)")->failures, 0u);
}

TEST(Suites, PappusFailsOverQuaternions) {
  const SuiteReport r = run_suite("pappus", PlaneModel(RingDescriptor::quaternion()), RunMode::sampled(7, 500));
  EXPECT_FALSE(r.passed());
  EXPECT_GE(r.find("Pappus")->failures, 1u);
  EXPECT_FALSE(r.find("Pappus")->witnesses.empty());
  EXPECT_EQ(r.find("Tecklenburg-GF(p)")->status(), ClaimStatus::Skipped);
}

TEST(Suites, DesarguesHoldsEverywhere) {
  for (const auto& ring : {kQ, RingDescriptor::prime_field(5), RingDescriptor::quaternion()}) {
    const SuiteReport r = run_suite("desargues", PlaneModel(ring), RunMode::sampled(3, 200));
    EXPECT_TRUE(r.passed()) << ring.name();
  }
}

TEST(Suites, AffineAxiomsExhaustiveGF3) {
  const SuiteReport r = run_suite("affine-axioms", PlaneModel(RingDescriptor::prime_field(3)), RunMode::exhaustive());
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_GT(c.tested, 0u) << c.claim;
}

TEST(Suites, MapOrderRational) {
  const SuiteReport r = run_suite("map-order", PlaneModel(kQ), RunMode::sampled(1, 200));
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.find("translation-order-staged")->tested, 0u);
  EXPECT_GT(r.find("projection-order")->tested, 0u);
}

TEST(RunAll, SkipsIncompatibleSuites) {
  const auto reports = run_all(PlaneModel(RingDescriptor::prime_field(5)), RunMode::sampled(1, 50));
  EXPECT_EQ(reports.size(), suite_names().size());
  bool saw_skip = false;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.suite;
    if (r.suite == "order-axioms") {
      for (const auto& c : r.checks) {
        EXPECT_EQ(c.status(), ClaimStatus::Skipped);
        EXPECT_FALSE(c.reason.empty());
      }
      saw_skip = true;
    }
  }
  EXPECT_TRUE(saw_skip);
}

TEST(RunAll, DeterministicForASeed) {
  const auto a = run_all(PlaneModel(RingDescriptor::quaternion()), RunMode::sampled(11, 30));
  const auto b = run_all(PlaneModel(RingDescriptor::quaternion()), RunMode::sampled(11, 30));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    ASSERT_EQ(a[s].checks.size(), b[s].checks.size());
    for (std::size_t c = 0; c < a[s].checks.size(); ++c) {
      EXPECT_EQ(a[s].checks[c].tested, b[s].checks[c].tested);
      EXPECT_EQ(a[s].checks[c].failures, b[s].checks[c].failures);
      ASSERT_EQ(a[s].checks[c].witnesses.size(), b[s].checks[c].witnesses.size());
      for (std::size_t w = 0; w < a[s].checks[c].witnesses.size(); ++w) {
        EXPECT_EQ(a[s].checks[c].witnesses[w].points, b[s].checks[c].witnesses[w].points);
      }
    }
  }
}

TEST(FrameIndependence, RationalSamples) {
  const SuiteReport r = frame_independence_check(PlaneModel(kQ), RunMode::sampled(1, 200));
  EXPECT_TRUE(r.passed());
  ASSERT_FALSE(r.checks.empty());
  EXPECT_GE(r.checks.front().tested, 200u);
}

TEST(FrameIndependence, ExhaustiveGF5) {
  const SuiteReport r = frame_independence_check(PlaneModel(RingDescriptor::prime_field(5)), RunMode::exhaustive());
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checks.front().tested, 0u);
}
