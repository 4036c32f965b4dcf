#pragma once

#include <cstdint>
#include <random>

#include "skewline/plane.hpp"

namespace skewline {

// Seeded generator of bounded random scalars, points and lines. Rationals
// have numerators in [-bound, bound] and denominators in [1, bound];
// quaternion components are drawn the same way with a smaller bound.
class Sampler {
 public:
  static constexpr int kDefaultBound = 20;

  Sampler(RingDescriptor ring, std::uint64_t seed, int bound = kDefaultBound)
      : ring_(ring), rng_(seed), bound_(bound) {}

  const RingDescriptor& ring() const { return ring_; }
  std::mt19937_64& engine() { return rng_; }

  long long integer(long long lo, long long hi);
  Scalar scalar();
  Scalar nonzero_scalar();
  Point point();
  Line line();
  Point point_on(const Line& l);
  Point point_off(const Line& l);
  // A rational strictly greater than zero.
  Scalar positive_rational();

 private:
  RingDescriptor ring_;
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace skewline
