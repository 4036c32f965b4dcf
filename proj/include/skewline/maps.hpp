#pragma once

#include <cstdint>
#include <utility>

#include "skewline/plane.hpp"

namespace skewline {

// Carries points of `source` to `target` along lines parallel to
// `direction`. A projection of a line onto itself is the identity.
class ParallelProjection {
 public:
  // Throws InvalidProjection when the direction is parallel to either line
  // (unless source == target, which normalizes to the identity).
  ParallelProjection(Line source, Line target, Line direction);

  const Line& source() const { return source_; }
  const Line& target() const { return target_; }
  const Line& direction() const { return direction_; }
  bool is_identity() const { return source_ == target_; }

  ParallelProjection inverse() const { return ParallelProjection(target_, source_, direction_); }

 private:
  Line source_;
  Line target_;
  Line direction_;
};

// Throws NotOnSource when a is not on pp.source().
Point project(const ParallelProjection& pp, const Point& a);

// Exhaustive over finite planes; over infinite rings checks 100 sampled
// distinct source points for distinct images and inverse round trips.
bool projection_is_bijection(const ParallelProjection& pp, const PlaneModel& model,
                             std::uint64_t seed = 1);

class Translation {
 public:
  Translation(Scalar dx, Scalar dy);
  static Translation identity(const RingDescriptor& ring);

  const Scalar& dx() const { return dx_; }
  const Scalar& dy() const { return dy_; }
  bool is_identity() const { return dx_.is_zero() && dy_.is_zero(); }

  friend bool operator==(const Translation&, const Translation&) = default;

 private:
  Scalar dx_;
  Scalar dy_;
};

Translation translation_from(const Point& a, const Point& b);
Point apply_translation(const Translation& t, const Point& p);
Line apply_translation(const Translation& t, const Line& l);
// (t2 ∘ t1): apply t1 first.
Translation compose_translations(const Translation& t2, const Translation& t1);

// True when t moves points along l (so t(l) = l).
bool moves_along(const Translation& t, const Line& l);

// For a translation not along l: the projection l -> t(l) in the direction
// of the translation, which agrees with t on l.
ParallelProjection translation_as_projection(const Translation& t, const Line& l);

// Splits a translation along l into t1: anchor -> via and t2: via -> t(anchor)
// with via off l, so both stages leave l.
std::pair<Translation, Translation> decompose_translation(const Translation& t, const Point& anchor,
                                                          const Point& via);

}  // namespace skewline
