#include "aging/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace aging {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

struct Range {
  double lo;
  double hi;
};

Range data_range(const std::vector<SvgSeries>& series, bool use_x) {
  bool seen = false;
  Range r{0.0, 1.0};
  for (const auto& s : series) {
    const auto& v = use_x ? s.x : s.y;
    for (double value : v) {
      if (!std::isfinite(value)) continue;
      if (!seen) {
        r.lo = r.hi = value;
        seen = true;
      } else {
        r.lo = std::min(r.lo, value);
        r.hi = std::max(r.hi, value);
      }
    }
  }
  if (!seen) return {0.0, 1.0};
  if (r.lo == r.hi) {
    const double pad = r.lo == 0.0 ? 0.5 : std::abs(r.lo) * 0.5;
    return {r.lo - pad, r.hi + pad};
  }
  const double pad = (r.hi - r.lo) * 0.04;
  return {r.lo - pad, r.hi + pad};
}

double tick_step(const Range& r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm < 1.5) return mag;
  if (norm < 3.5) return 2.0 * mag;
  if (norm < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

std::vector<double> ticks(const Range& r) {
  const double step = tick_step(r);
  std::vector<double> out;
  double t = std::ceil(r.lo / step - 1e-9) * step;
  while (t <= r.hi + 1e-9 * step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    t += step;
  }
  return out;
}

std::string tick_label(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", v);
  return buffer;
}

std::string coord(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const SvgChart& chart) {
  for (const auto& s : chart.series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("svg series length mismatch");
  }
  const double ml = 72.0, mr = 24.0, mt = 40.0, mb = 56.0;
  const double w = chart.width, h = chart.height;
  const double pw = w - ml - mr, ph = h - mt - mb;
  const Range rx = data_range(chart.series, true);
  const Range ry = data_range(chart.series, false);
  const auto px = [&](double x) { return ml + (x - rx.lo) / (rx.hi - rx.lo) * pw; };
  const auto py = [&](double y) { return mt + ph - (y - ry.lo) / (ry.hi - ry.lo) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << chart.width << " "
     << chart.height << "\" width=\"" << chart.width << "\" height=\"" << chart.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << chart.width << "\" height=\"" << chart.height
     << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"" << coord(w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << escape(chart.title) << "</text>\n";

  for (double t : ticks(rx)) {
    const double x = px(t);
    os << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(mt) << "\" x2=\"" << coord(x)
       << "\" y2=\"" << coord(mt + ph) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << coord(x) << "\" y=\"" << coord(mt + ph + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(ry)) {
    const double y = py(t);
    os << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(ml + pw)
       << "\" y2=\"" << coord(y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << coord(ml - 6) << "\" y=\"" << coord(y + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(t)
       << "</text>\n";
  }
  os << "<rect x=\"" << coord(ml) << "\" y=\"" << coord(mt) << "\" width=\"" << coord(pw)
     << "\" height=\"" << coord(ph) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  os << "<text x=\"" << coord(ml + pw / 2) << "\" y=\"" << coord(h - 12)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape(chart.x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << coord(mt + ph / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 18 "
     << coord(mt + ph / 2) << ")\">" << escape(chart.y_label) << "</text>\n";

  int color = 0;
  for (const auto& s : chart.series) {
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[color % kPaletteSize]
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      os << (i ? " " : "") << coord(px(s.x[i])) << "," << coord(py(s.y[i]));
    }
    os << "\"/>\n";
    ++color;
  }

  bool any_label = false;
  for (const auto& s : chart.series) any_label |= !s.label.empty();
  if (any_label) {
    const double lx = ml + pw - 150.0;
    double ly = mt + 12.0;
    color = 0;
    for (const auto& s : chart.series) {
      os << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly - 4) << "\" x2=\""
         << coord(lx + 22) << "\" y2=\"" << coord(ly - 4) << "\" stroke=\""
         << kPalette[color % kPaletteSize] << "\" stroke-width=\"1.5\"/>\n";
      os << "<text x=\"" << coord(lx + 28) << "\" y=\"" << coord(ly)
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
      ly += 16.0;
      ++color;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aging
