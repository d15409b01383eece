#pragma once

#include <limits>
#include <string>
#include <vector>

namespace fjhawkes {

// One polyline on a chart. x and y must have equal, nonzero length.
struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Write a self-contained SVG line chart: axes, tick labels, one polyline per
// series, legend. Values beyond clip_limit in magnitude are clamped and the
// title gains a clip marker, so diverging runs still render. Throws
// EmptySeries when there is nothing to draw, IoError when the file cannot be
// written.
void emit_svg(const std::vector<Series>& series, const std::string& title,
              const std::string& path,
              double clip_limit = std::numeric_limits<double>::infinity());

}  // namespace fjhawkes
