#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewline/plane.hpp"

namespace skewline {

// Concrete data reproducing a failed (or rejected) check.
struct Witness {
  std::string note;
  std::vector<std::pair<std::string, Point>> points;
  std::vector<std::pair<std::string, Line>> lines;
};

enum class ClaimStatus { Pass, Fail, NotInstantiable, Skipped };

std::string_view claim_status_name(ClaimStatus status);

// Outcome of one executable claim over a batch of instances.
struct ClaimResult {
  static constexpr std::size_t kMaxWitnesses = 5;

  std::string claim;
  std::string anchor;
  std::uint64_t tested = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
  ClaimStatus status_override = ClaimStatus::Pass;
  std::string reason;  // for NotInstantiable / Skipped

  ClaimResult() = default;
  ClaimResult(std::string id, std::string anchor_text)
      : claim(std::move(id)), anchor(std::move(anchor_text)) {}

  void pass() { ++tested; }
  void fail(Witness w) {
    ++tested;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
  void check(bool ok, const auto& make_witness) {
    if (ok) {
      pass();
    } else {
      fail(make_witness());
    }
  }
  void merge(const ClaimResult& other) {
    tested += other.tested;
    failures += other.failures;
    for (const auto& w : other.witnesses) {
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
    }
  }

  ClaimStatus status() const {
    if (status_override != ClaimStatus::Pass) return status_override;
    return failures == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
  }
  bool ok() const { return status() != ClaimStatus::Fail; }
};

inline bool all_ok(const std::vector<ClaimResult>& claims) {
  for (const auto& c : claims) {
    if (!c.ok()) return false;
  }
  return true;
}

}  // namespace skewline
