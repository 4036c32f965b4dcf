#include "skewline/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

namespace skewline {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

void open_svg(std::ostringstream& out, const SvgOptions& o) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width << "\" height=\""
      << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << o.width << "\" height=\"" << o.height << "\" fill=\"white\"/>\n";
}

// Lines that belong to the frame (or projection carriers) are drawn solid.
bool solid_label(const std::string& label) { return label == "ell" || label == "source" || label == "target"; }

struct Labelled {
  std::string label;
  std::variant<Point, Line> value;
  bool result = false;
  std::size_t trace = 0;
};

std::vector<Labelled> collect(const std::vector<ConstructionTrace>& traces) {
  std::vector<Labelled> items;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const auto& t = traces[k];
    if (t.steps.empty()) continue;
    if (t.frame) {
      items.push_back({"ell", t.frame->line(), false, k});
      items.push_back({"O", t.frame->origin(), false, k});
      items.push_back({"I", t.frame->unit(), false, k});
    }
    for (const auto& [label, p] : t.inputs) items.push_back({label, p, false, k});
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const bool last = s + 1 == t.steps.size();
      items.push_back({t.steps[s].label, t.steps[s].value, last && t.steps[s].is_point(), k});
    }
  }
  return items;
}

// ------------------------------------------------------------------ rational

struct Box {
  double x0, x1, y0, y1;
};

std::optional<std::pair<std::array<double, 2>, std::array<double, 2>>> clip(const Line& l, const Box& b) {
  if (l.is_vertical()) {
    const double c = l.abscissa().to_double();
    if (c < b.x0 || c > b.x1) return std::nullopt;
    return std::pair{std::array{c, b.y0}, std::array{c, b.y1}};
  }
  const double m = l.slope().to_double(), k = l.intercept().to_double();
  double lo = b.x0, hi = b.x1;
  if (m != 0) {
    double a = (b.y0 - k) / m, c = (b.y1 - k) / m;
    if (a > c) std::swap(a, c);
    lo = std::max(lo, a);
    hi = std::min(hi, c);
  } else if (k < b.y0 || k > b.y1) {
    return std::nullopt;
  }
  if (lo > hi) return std::nullopt;
  return std::pair{std::array{lo, lo * m + k}, std::array{hi, hi * m + k}};
}

std::string render_rational(const std::vector<Labelled>& items, const SvgOptions& o) {
  std::ostringstream out;
  open_svg(out, o);
  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& it : items) {
    if (const auto* p = std::get_if<Point>(&it.value)) {
      const double x = p->x.to_double(), y = p->y.to_double();
      x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  if (x0 > x1) {
    out << "</svg>\n";
    return out.str();
  }
  if (x1 - x0 == 0) x0 -= 1, x1 += 1;
  if (y1 - y0 == 0) y0 -= 1, y1 += 1;
  const double mx = 0.1 * (x1 - x0), my = 0.1 * (y1 - y0);
  const Box box{x0 - mx, x1 + mx, y0 - my, y1 + my};
  auto sx = [&](double x) { return (x - box.x0) / (box.x1 - box.x0) * o.width; };
  auto sy = [&](double y) { return (box.y1 - y) / (box.y1 - box.y0) * o.height; };

  out << "<g id=\"lines\" fill=\"none\">\n";
  for (const auto& it : items) {
    const auto* l = std::get_if<Line>(&it.value);
    if (!l) continue;
    const auto seg = clip(*l, box);
    if (!seg) continue;
    const bool solid = solid_label(it.label);
    const auto& [a, b] = *seg;
    out << "<line x1=\"" << num(sx(a[0])) << "\" y1=\"" << num(sy(a[1])) << "\" x2=\"" << num(sx(b[0]))
        << "\" y2=\"" << num(sy(b[1])) << "\" stroke=\"" << (solid ? "black" : "#555555") << "\" stroke-width=\""
        << (solid ? 2 : 1) << '"' << (solid ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    const double lx = std::clamp(sx(b[0]) - 4, 40.0, o.width - 4.0);
    const double ly = std::clamp(sy(b[1]) - 4, 14.0, o.height - 4.0);
    out << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#333333\">" << escape(it.label) << "</text>\n";
  }
  out << "</g>\n<g id=\"points\">\n";
  for (const auto& it : items) {
    const auto* p = std::get_if<Point>(&it.value);
    if (!p) continue;
    const double x = sx(p->x.to_double()), y = sy(p->y.to_double());
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << (it.result ? 6 : 4) << "\" fill=\""
        << (it.result ? "red" : "black") << "\"/>\n";
    out << "<text x=\"" << num(x + 7) << "\" y=\"" << num(y - 7) << "\" font-size=\"13\""
        << (it.result ? " font-weight=\"bold\" fill=\"red\"" : "") << '>' << escape(it.label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

// --------------------------------------------------------------- prime field

std::string render_grid(const std::vector<Labelled>& items, std::uint32_t p, const SvgOptions& o) {
  std::ostringstream out;
  open_svg(out, o);
  const double cw = static_cast<double>(o.width) / (p + 1), ch = static_cast<double>(o.height) / (p + 1);
  auto cx = [&](const Scalar& s) { return (s.as_residue().value + 1) * cw; };
  auto cy = [&](const Scalar& s) { return o.height - (s.as_residue().value + 1) * ch; };
  const RingDescriptor ring = RingDescriptor::prime_field(p);

  out << "<g id=\"grid\" font-size=\"11\" fill=\"#999999\">\n";
  for (std::uint32_t v = 0; v < p; ++v) {
    const Scalar s = Scalar::from_int(ring, v);
    out << "<text x=\"" << num(cx(s)) << "\" y=\"" << num(o.height - ch / 3) << "\" text-anchor=\"middle\">" << v
        << "</text>\n";
    out << "<text x=\"" << num(cw / 3) << "\" y=\"" << num(cy(s) + 4) << "\" text-anchor=\"middle\">" << v
        << "</text>\n";
  }
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) {
      out << "<circle cx=\"" << num(cx(Scalar::from_int(ring, x))) << "\" cy=\"" << num(cy(Scalar::from_int(ring, y)))
          << "\" r=\"2\"/>\n";
    }
  }
  out << "</g>\n<g id=\"lines\">\n";
  PlaneModel model(ring);
  std::size_t colour = 0;
  for (const auto& it : items) {
    const auto* l = std::get_if<Line>(&it.value);
    if (!l) continue;
    const bool solid = solid_label(it.label);
    const char* c = solid ? "black" : kPalette[colour++ % std::size(kPalette)];
    out << "<g class=\"line\" data-label=\"" << escape(it.label) << "\" stroke=\"" << c << "\" fill=\""
        << (solid ? c : "none") << '"' << (solid ? "" : " stroke-dasharray=\"2 2\"") << ">\n";
    const auto pts = model.points_on(*l);
    for (const auto& q : pts) {
      out << "<rect x=\"" << num(cx(q.x) - 5) << "\" y=\"" << num(cy(q.y) - 5) << "\" width=\"10\" height=\"10\"/>\n";
    }
    out << "<text x=\"" << num(cx(pts.back().x) + 7) << "\" y=\"" << num(cy(pts.back().y) + 12)
        << "\" font-size=\"10\" stroke=\"none\" fill=\"" << c << "\">" << escape(it.label) << "</text>\n</g>\n";
  }
  out << "</g>\n<g id=\"points\">\n";
  for (const auto& it : items) {
    const auto* q = std::get_if<Point>(&it.value);
    if (!q) continue;
    out << "<circle cx=\"" << num(cx(q->x)) << "\" cy=\"" << num(cy(q->y)) << "\" r=\"" << (it.result ? 6 : 4)
        << "\" fill=\"" << (it.result ? "red" : "black") << "\"/>\n";
    out << "<text x=\"" << num(cx(q->x) + 7) << "\" y=\"" << num(cy(q->y) - 7) << "\" font-size=\"13\""
        << (it.result ? " font-weight=\"bold\" fill=\"red\"" : "") << '>' << escape(it.label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const std::vector<ConstructionTrace>& traces, const SvgOptions& options) {
  const auto items = collect(traces);
  if (items.empty()) {
    std::ostringstream out;
    open_svg(out, options);
    out << "</svg>\n";
    return out.str();
  }
  const auto& first = std::get_if<Point>(&items.front().value) ? std::get<Point>(items.front().value).ring()
                                                                : std::get<Line>(items.front().value).ring();
  switch (first.kind()) {
    case RingKind::Rational: return render_rational(items, options);
    case RingKind::PrimeField: return render_grid(items, first.modulus(), options);
    case RingKind::RationalQuaternion: break;
  }
  throw GeometryError(ErrorKind::NotPlottable, "quaternion coordinates cannot be plotted");
}

std::string render_svg(const ConstructionTrace& trace, const SvgOptions& options) {
  return render_svg(std::vector<ConstructionTrace>{trace}, options);
}

}  // namespace skewline
