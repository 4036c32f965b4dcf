#include "skewline/line_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skewline/sampling.hpp"

namespace skewline {

Frame::Frame(Line line, Point origin, Point unit)
    : line_(std::move(line)), origin_(std::move(origin)), unit_(std::move(unit)) {
  if (origin_ == unit_) throw GeometryError(ErrorKind::InvalidFrame, "O and I coincide");
  if (!line_.contains(origin_) || !line_.contains(unit_)) {
    throw GeometryError(ErrorKind::InvalidFrame, "O and I must lie on " + line_.to_string());
  }
}

Frame Frame::through(const Point& origin, const Point& unit) {
  if (origin == unit) throw GeometryError(ErrorKind::InvalidFrame, "O and I coincide");
  return Frame(line_through(origin, unit), origin, unit);
}

Frame Frame::standard(const RingDescriptor& ring) {
  PlaneModel model(ring);
  return through(model.point(0, 0), model.point(1, 0));
}

namespace {

class Recorder {
 public:
  Recorder(ConstructionTrace* out, const Frame& frame, std::string op,
           std::vector<std::pair<std::string, Point>> inputs, const Point& b)
      : out_(out), frame_(frame), op_(std::move(op)), inputs_(std::move(inputs)), b_(b) {
    if (out_) steps_.push_back({"B", b});
  }

  const Line& line(std::string label, const Line& l) {
    if (out_) steps_.push_back({std::move(label), l});
    return l;
  }

  Point meet(std::string label, const Line& l1, const Line& l2) {
    const Meet m = intersect(l1, l2);
    const Point* p = std::get_if<Point>(&m);
    if (!p) {
      throw GeometryError(ErrorKind::ConstructionDegenerate,
                          op_ + ": step " + label + " has no unique intersection");
    }
    Point result = *p;
    if (out_) steps_.push_back({std::move(label), result});
    return result;
  }

  Point finish(const Point& result) {
    if (out_) {
      *out_ = ConstructionTrace{op_, frame_, std::move(inputs_), b_, std::move(steps_), result};
    }
    return result;
  }

 private:
  ConstructionTrace* out_;
  const Frame& frame_;
  std::string op_;
  std::vector<std::pair<std::string, Point>> inputs_;
  Point b_;
  std::vector<TraceObject> steps_;
};

void require_on_line(const Frame& frame, const Point& p, const char* name) {
  if (!frame.line().contains(p)) {
    throw GeometryError(ErrorKind::NotOnLine,
                        std::string(name) + " = " + p.to_string() + " is not on " + frame.line().to_string());
  }
}

void require_off_line(const Frame& frame, const Point& b) {
  if (frame.line().contains(b)) {
    throw GeometryError(ErrorKind::ConstructionDegenerate,
                        "auxiliary B = " + b.to_string() + " lies on the frame line");
  }
}

Line join(Recorder& rec, std::string label, const Point& p, const Point& q) {
  if (p == q) {
    throw GeometryError(ErrorKind::ConstructionDegenerate, "step " + label + " joins a point to itself");
  }
  return rec.line(std::move(label), line_through(p, q));
}

}  // namespace

Point choose_auxiliary(const Frame& frame, std::uint64_t seed) {
  const auto ring = frame.ring();
  const Point& o = frame.origin();
  if (seed == 0) {
    Point up{o.x, o.y + Scalar::one(ring)};
    if (!frame.line().contains(up)) return up;
    return Point{o.x + Scalar::one(ring), o.y};
  }
  if (ring.finite()) {
    PlaneModel model(ring);
    std::vector<Point> off;
    for (auto& p : model.enumerate_points()) {
      if (!frame.line().contains(p)) off.push_back(std::move(p));
    }
    return off[(seed - 1) % off.size()];
  }
  Sampler sampler(ring, seed);
  return sampler.point_off(frame.line());
}

Point point_add(const Frame& frame, const Point& a, const Point& c, const Point& b, ConstructionTrace* trace) {
  require_on_line(frame, a, "A");
  require_on_line(frame, c, "C");
  require_off_line(frame, b);
  Recorder rec(trace, frame, "add", {{"A", a}, {"C", c}}, b);
  Line through_b = rec.line("ell^B", parallel_through(b, frame.line()));
  Line ob = join(rec, "ell^OB", frame.origin(), b);
  Line a_par_ob = rec.line("ell^A_OB", parallel_through(a, ob));
  Point d = rec.meet("D", through_b, a_par_ob);
  Line cb = join(rec, "ell^CB", c, b);
  Line d_par_cb = rec.line("ell^D_CB", parallel_through(d, cb));
  return rec.finish(rec.meet("E", d_par_cb, frame.line()));
}

Point point_sub(const Frame& frame, const Point& e, const Point& a, const Point& b, ConstructionTrace* trace) {
  require_on_line(frame, e, "E");
  require_on_line(frame, a, "A");
  require_off_line(frame, b);
  Recorder rec(trace, frame, "sub", {{"E", e}, {"A", a}}, b);
  Line through_b = rec.line("ell^B", parallel_through(b, frame.line()));
  Line ob = join(rec, "ell^OB", frame.origin(), b);
  Line a_par_ob = rec.line("ell^A_OB", parallel_through(a, ob));
  Point d = rec.meet("D", through_b, a_par_ob);
  Line de = join(rec, "ell^DE", d, e);
  Line b_par_de = rec.line("ell^B_DE", parallel_through(b, de));
  return rec.finish(rec.meet("C", b_par_de, frame.line()));
}

Point point_neg(const Frame& frame, const Point& a, const Point& b, ConstructionTrace* trace) {
  return point_sub(frame, frame.origin(), a, b, trace);
}

Point point_mul(const Frame& frame, const Point& a, const Point& c, const Point& b, ConstructionTrace* trace) {
  require_on_line(frame, a, "A");
  require_on_line(frame, c, "C");
  require_off_line(frame, b);
  Recorder rec(trace, frame, "mul", {{"A", a}, {"C", c}}, b);
  Line ib = join(rec, "ell^IB", frame.unit(), b);
  Line ob = join(rec, "ell^OB", frame.origin(), b);
  Line a_par_ib = rec.line("ell^A_IB", parallel_through(a, ib));
  Point e = rec.meet("E", a_par_ib, ob);
  Line bc = join(rec, "ell^BC", b, c);
  Line e_par_bc = rec.line("ell^E_BC", parallel_through(e, bc));
  return rec.finish(rec.meet("F", e_par_bc, frame.line()));
}

Point point_inv(const Frame& frame, const Point& a, Side side, const Point& b, ConstructionTrace* trace) {
  require_on_line(frame, a, "A");
  require_off_line(frame, b);
  if (a == frame.origin()) throw GeometryError(ErrorKind::DivisionByZero, "O has no inverse");
  if (side == Side::Right) {
    Recorder rec(trace, frame, "inv-right", {{"A", a}}, b);
    Line ib = join(rec, "ell^IB", frame.unit(), b);
    Line ob = join(rec, "ell^OB", frame.origin(), b);
    Line a_par_ib = rec.line("ell^A_IB", parallel_through(a, ib));
    Point e = rec.meet("E", a_par_ib, ob);
    Line ei = join(rec, "ell^EI", e, frame.unit());
    Line b_par_ei = rec.line("ell^B_EI", parallel_through(b, ei));
    return rec.finish(rec.meet("X", b_par_ei, frame.line()));
  }
  Recorder rec(trace, frame, "inv-left", {{"A", a}}, b);
  Line ba = join(rec, "ell^BA", b, a);
  Line ob = join(rec, "ell^OB", frame.origin(), b);
  Line i_par_ba = rec.line("ell^I_BA", parallel_through(frame.unit(), ba));
  Point e = rec.meet("E'", i_par_ba, ob);
  Line ib = join(rec, "ell^IB", frame.unit(), b);
  Line e_par_ib = rec.line("ell^E'_IB", parallel_through(e, ib));
  return rec.finish(rec.meet("X", e_par_ib, frame.line()));
}

Point project_traced(const ParallelProjection& pp, const Point& a, ConstructionTrace* trace) {
  Point image = project(pp, a);
  if (trace) {
    std::vector<TraceObject> steps{{"source", pp.source()}, {"target", pp.target()}, {"direction", pp.direction()}};
    if (!pp.is_identity()) steps.push_back({"ell^A_d", parallel_through(a, pp.direction())});
    steps.push_back({"P", image});
    *trace = ConstructionTrace{"project", std::nullopt, {{"A", a}}, std::nullopt, std::move(steps), image};
  }
  return image;
}

Point translate_traced(const Translation& t, const Point& p, ConstructionTrace* trace) {
  Point image = apply_translation(t, p);
  if (trace) {
    std::vector<TraceObject> steps;
    if (!t.is_identity()) steps.push_back({"ell^P_v", line_through(p, image)});
    steps.push_back({"P'", image});
    *trace = ConstructionTrace{"translate", std::nullopt, {{"P", p}, {"v", Point{t.dx(), t.dy()}}},
                               std::nullopt, std::move(steps), image};
  }
  return image;
}

ConstructionTrace replay(const ConstructionTrace& trace) {
  auto input = [&](std::size_t i) -> const Point& {
    if (i >= trace.inputs.size()) {
      throw GeometryError(ErrorKind::InvalidTrace, trace.op + " trace is missing an input");
    }
    return trace.inputs[i].second;
  };
  auto step_line = [&](std::string_view label) -> const Line& {
    for (const auto& s : trace.steps) {
      if (s.label == label && !s.is_point()) return std::get<Line>(s.value);
    }
    throw GeometryError(ErrorKind::InvalidTrace, trace.op + " trace has no line '" + std::string(label) + "'");
  };
  ConstructionTrace out = trace;
  if (trace.op == "project") {
    project_traced(ParallelProjection(step_line("source"), step_line("target"), step_line("direction")),
                   input(0), &out);
    return out;
  }
  if (trace.op == "translate") {
    const Point& v = input(1);
    translate_traced(Translation(v.x, v.y), input(0), &out);
    return out;
  }
  if (!trace.frame || !trace.auxiliary) {
    throw GeometryError(ErrorKind::InvalidTrace, trace.op + " trace needs a frame and an auxiliary point");
  }
  const Frame& f = *trace.frame;
  const Point& b = *trace.auxiliary;
  if (trace.op == "add") {
    point_add(f, input(0), input(1), b, &out);
  } else if (trace.op == "sub") {
    point_sub(f, input(0), input(1), b, &out);
  } else if (trace.op == "mul") {
    point_mul(f, input(0), input(1), b, &out);
  } else if (trace.op == "inv-right") {
    point_inv(f, input(0), Side::Right, b, &out);
  } else if (trace.op == "inv-left") {
    point_inv(f, input(0), Side::Left, b, &out);
  } else {
    throw GeometryError(ErrorKind::InvalidTrace, "unknown construction '" + trace.op + "'");
  }
  return out;
}

Scalar to_parameter(const Frame& frame, const Point& p) {
  require_on_line(frame, p, "P");
  const Point& o = frame.origin();
  const Point& i = frame.unit();
  Scalar wx = i.x - o.x;
  if (!wx.is_zero()) return (p.x - o.x) * wx.inverse();
  return (p.y - o.y) * (i.y - o.y).inverse();
}

Point from_parameter(const Frame& frame, const Scalar& t) {
  const Point& o = frame.origin();
  const Point& i = frame.unit();
  return {o.x + t * (i.x - o.x), o.y + t * (i.y - o.y)};
}

CayleyTables cayley_tables(const Frame& frame, std::uint64_t seed) {
  PlaneModel model(frame.ring());
  CayleyTables tables;
  for (const auto& t : model.elements()) tables.elements.push_back(from_parameter(frame, t));

  auto less = [](const Point& a, const Point& b) { return canonical_less(a, b); };
  std::map<Point, std::size_t, decltype(less)> index(less);
  for (std::size_t k = 0; k < tables.elements.size(); ++k) index.emplace(tables.elements[k], k);

  const Point b = choose_auxiliary(frame, seed);
  const std::size_t n = tables.elements.size();
  tables.add.assign(n, std::vector<std::size_t>(n));
  tables.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      tables.add[r][c] = index.at(point_add(frame, tables.elements[r], tables.elements[c], b));
      tables.mul[r][c] = index.at(point_mul(frame, tables.elements[r], tables.elements[c], b));
    }
  }
  return tables;
}

std::string format_table_text(const CayleyTables& tables, bool multiplication) {
  const auto& table = multiplication ? tables.mul : tables.add;
  const std::size_t n = tables.elements.size();
  const std::size_t width = std::max<std::size_t>(1, std::to_string(n == 0 ? 0 : n - 1).size());
  auto cell = [width](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  std::ostringstream out;
  out << cell(multiplication ? "*" : "+") << " |";
  for (std::size_t c = 0; c < n; ++c) out << ' ' << cell(std::to_string(c));
  out << '\n' << std::string(width + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    out << cell(std::to_string(r)) << " |";
    for (std::size_t c = 0; c < n; ++c) out << ' ' << cell(std::to_string(table[r][c]));
    out << '\n';
  }
  return out.str();
}

std::string format_table_csv(const CayleyTables& tables, bool multiplication) {
  const auto& table = multiplication ? tables.mul : tables.add;
  const std::size_t n = tables.elements.size();
  std::ostringstream out;
  out << (multiplication ? "*" : "+");
  for (std::size_t c = 0; c < n; ++c) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    out << r;
    for (std::size_t c = 0; c < n; ++c) out << ',' << table[r][c];
    out << '\n';
  }
  return out.str();
}

}  // namespace skewline
