#ifndef HETERORANK_SVG_HPP
#define HETERORANK_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace hr {

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points; // sorted by x
};

// Minimal static line plot; CSV stays the canonical output, this is just a
// quick look.
void write_svg_line_plot(const std::string& path, const std::string& title,
                         const std::string& x_label, const std::string& y_label,
                         const std::vector<PlotSeries>& series);

} // namespace hr

#endif
