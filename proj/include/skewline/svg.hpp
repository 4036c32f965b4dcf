#pragma once

#include <string>
#include <vector>

#include "skewline/line_algebra.hpp"

namespace skewline {

struct SvgOptions {
  int width = 640;
  int height = 640;
};

// Deterministic SVG 1.1. Rational traces are fitted to the canvas with a 10%
// margin: the frame line solid, auxiliary lines dashed, the result
// highlighted, every object labelled by its step name. Prime-field traces
// render on the p x p grid with each line drawn as its point set. Quaternion
// traces throw NotPlottable. An empty list gives an empty canvas.
std::string render_svg(const std::vector<ConstructionTrace>& traces, const SvgOptions& options = {});
std::string render_svg(const ConstructionTrace& trace, const SvgOptions& options = {});

}  // namespace skewline
