#include "skewline/sampling.hpp"

namespace skewline {

long long Sampler::integer(long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return dist(rng_);
}

Scalar Sampler::scalar() {
  switch (ring_.kind()) {
    case RingKind::Rational:
      return Scalar::rational(integer(-bound_, bound_), integer(1, bound_));
    case RingKind::PrimeField:
      return Scalar::residue(integer(0, ring_.modulus() - 1), ring_.modulus());
    case RingKind::RationalQuaternion: {
      const int qb = 3;
      auto component = [&] {
        return mpq_class(static_cast<long>(integer(-qb, qb)), static_cast<unsigned long>(integer(1, 2)));
      };
      auto a = component();
      auto b = component();
      auto c = component();
      auto d = component();
      return Scalar::quaternion(a, b, c, d);
    }
  }
  return Scalar::zero(ring_);
}

Scalar Sampler::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

Point Sampler::point() { return {scalar(), scalar()}; }

Line Sampler::line() {
  // vertical lines about one time in eight
  if (integer(0, 7) == 0) return Line::vertical(scalar());
  return Line::sloped(scalar(), scalar());
}

Point Sampler::point_on(const Line& l) { return l.at(scalar()); }

Point Sampler::point_off(const Line& l) {
  for (;;) {
    Point p = point();
    if (!l.contains(p)) return p;
  }
}

Scalar Sampler::positive_rational() {
  return Scalar::rational(integer(1, bound_), integer(1, bound_));
}

}  // namespace skewline
