#include "skewline/maps.hpp"

#include <set>

#include "skewline/sampling.hpp"

namespace skewline {

ParallelProjection::ParallelProjection(Line source, Line target, Line direction)
    : source_(std::move(source)), target_(std::move(target)), direction_(std::move(direction)) {
  if (source_ == target_) return;
  if (parallel(direction_, source_) || parallel(direction_, target_)) {
    throw GeometryError(ErrorKind::InvalidProjection,
                        "direction " + direction_.to_string() + " is parallel to source or target");
  }
}

Point project(const ParallelProjection& pp, const Point& a) {
  if (!pp.source().contains(a)) {
    throw GeometryError(ErrorKind::NotOnSource, a.to_string() + " is not on " + pp.source().to_string());
  }
  if (pp.is_identity()) return a;
  return std::get<Point>(intersect(parallel_through(a, pp.direction()), pp.target()));
}

bool projection_is_bijection(const ParallelProjection& pp, const PlaneModel& model, std::uint64_t seed) {
  auto less = [](const Point& a, const Point& b) { return canonical_less(a, b); };
  std::set<Point, decltype(less)> images(less);
  if (model.ring().finite()) {
    auto src = model.points_on(pp.source());
    for (const auto& p : src) {
      Point img = project(pp, p);
      if (!pp.target().contains(img)) return false;
      images.insert(img);
    }
    return images.size() == model.ring().modulus();
  }
  Sampler sampler(model.ring(), seed);
  std::set<Point, decltype(less)> sources(less);
  auto inv = pp.inverse();
  while (sources.size() < 100) {
    Point p = sampler.point_on(pp.source());
    if (!sources.insert(p).second) continue;
    Point img = project(pp, p);
    if (!pp.target().contains(img) || !(project(inv, img) == p)) return false;
    images.insert(img);
  }
  return images.size() == sources.size();
}

Translation::Translation(Scalar dx, Scalar dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  if (!(dx_.ring() == dy_.ring())) {
    throw GeometryError(ErrorKind::RingMismatch, "translation components from different rings");
  }
}

Translation Translation::identity(const RingDescriptor& ring) {
  return Translation(Scalar::zero(ring), Scalar::zero(ring));
}

Translation translation_from(const Point& a, const Point& b) { return Translation(b.x - a.x, b.y - a.y); }

Point apply_translation(const Translation& t, const Point& p) { return {p.x + t.dx(), p.y + t.dy()}; }

Line apply_translation(const Translation& t, const Line& l) {
  Point base = l.at(Scalar::zero(l.ring()));
  return parallel_through(apply_translation(t, base), l);
}

Translation compose_translations(const Translation& t2, const Translation& t1) {
  return Translation(t1.dx() + t2.dx(), t1.dy() + t2.dy());
}

bool moves_along(const Translation& t, const Line& l) { return apply_translation(t, l) == l; }

ParallelProjection translation_as_projection(const Translation& t, const Line& l) {
  if (t.is_identity()) return ParallelProjection(l, l, l);
  if (moves_along(t, l)) {
    throw GeometryError(ErrorKind::InvalidProjection, "translation runs along " + l.to_string());
  }
  Point a = l.at(Scalar::zero(l.ring()));
  // the direction comes from the incidence structure only: the join of a and t(a)
  return ParallelProjection(l, apply_translation(t, l), line_through(a, apply_translation(t, a)));
}

std::pair<Translation, Translation> decompose_translation(const Translation& t, const Point& anchor,
                                                          const Point& via) {
  return {translation_from(anchor, via), translation_from(via, apply_translation(t, anchor))};
}

}  // namespace skewline
