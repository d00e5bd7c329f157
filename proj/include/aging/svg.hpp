#ifndef AGING_SVG_HPP
#define AGING_SVG_HPP

#include <string>
#include <vector>

namespace aging {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  int width = 720;
  int height = 480;
};

// Self-contained SVG document: axes with 1/2/5-decade ticks, one polyline per
// series, legend when labels are present. No external CSS or fonts.
std::string render_line_chart(const SvgChart& chart);

}  // namespace aging

#endif
