#include "fjhawkes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "fjhawkes/errors.hpp"

namespace fjhawkes {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = kWidth - 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = kHeight - 50.0;

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

void emit_svg(const std::vector<Series>& series, const std::string& title,
              const std::string& path, double clip_limit) {
  if (series.empty()) throw EmptySeries("svg: no series to draw");

  // Clamp out-of-range values so diverging data still produces a finite
  // picture; NaNs are dropped outright.
  bool clipped = false;
  std::vector<Series> rows;
  rows.reserve(series.size());
  for (const Series& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      throw EmptySeries("svg: series '" + s.name + "' is empty or ragged");
    }
    Series r;
    r.name = s.name;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || std::isnan(s.y[i])) continue;
      double y = s.y[i];
      if (std::abs(y) > clip_limit) {
        y = std::copysign(clip_limit, y);
        clipped = true;
      }
      if (!std::isfinite(y)) continue;
      r.x.push_back(s.x[i]);
      r.y.push_back(y);
    }
    if (r.x.empty()) throw EmptySeries("svg: series '" + s.name + "' has no drawable points");
    rows.push_back(std::move(r));
  }

  double xmin = rows[0].x[0], xmax = xmin, ymin = rows[0].y[0], ymax = ymin;
  for (const Series& s : rows) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (xmax == xmin) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (ymax == ymin) {
    ymin -= 1.0;
    ymax += 1.0;
  }

  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); };

  std::ofstream out(path);
  if (!out) throw IoError("svg: cannot open " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  std::string shown_title = title;
  if (clipped) shown_title += " [clipped at " + short_num(clip_limit) + "]";
  out << "<text x=\"" << (kLeft + (kRight - kLeft) / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << escape(shown_title) << "</text>\n";

  // axes and ticks
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    out << "<line x1=\"" << coord(px(fx)) << "\" y1=\"" << kBottom << "\" x2=\"" << coord(px(fx))
        << "\" y2=\"" << (kBottom + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << coord(px(fx)) << "\" y=\"" << (kBottom + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << short_num(fx) << "</text>\n";
    out << "<line x1=\"" << (kLeft - 5) << "\" y1=\"" << coord(py(fy)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << coord(py(fy)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (kLeft - 8) << "\" y=\"" << coord(py(fy) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << short_num(fy)
        << "</text>\n";
  }

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const char* color = kPalette[k % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < rows[k].x.size(); ++i) {
      if (i > 0) out << ' ';
      out << coord(px(rows[k].x[i])) << ',' << coord(py(rows[k].y[i]));
    }
    out << "\"/>\n";
    // legend entry
    const double ly = kTop + 16.0 * static_cast<double>(k);
    out << "<line x1=\"" << (kRight + 10) << "\" y1=\"" << ly << "\" x2=\"" << (kRight + 30)
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << (kRight + 35) << "\" y=\"" << (ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(rows[k].name)
        << "</text>\n";
  }

  out << "</svg>\n";
  out.close();
  if (out.fail()) throw IoError("svg: write failed for " + path);
}

}  // namespace fjhawkes
