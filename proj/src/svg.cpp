#include "heterorank/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "heterorank/errors.hpp"

namespace hr {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

} // namespace

void write_svg_line_plot(const std::string& path, const std::string& title,
                         const std::string& x_label, const std::string& y_label,
                         const std::vector<PlotSeries>& series) {
    const double width = 640, height = 420;
    const double left = 70, right = 30, top = 40, bottom = 55;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    ymin = std::min(ymin, 0.0);
    ymax *= 1.05;

    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ofstream os(path);
    if (!os) throw IoError("cannot write svg " + path);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
       << height << "' viewBox='0 0 " << width << ' ' << height << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << width / 2 << "' y='22' text-anchor='middle' font-size='15' "
          "font-family='sans-serif'>" << title << "</text>\n";

    // axes
    os << "<line x1='" << left << "' y1='" << top << "' x2='" << left << "' y2='"
       << top + plot_h << "' stroke='black'/>\n";
    os << "<line x1='" << left << "' y1='" << top + plot_h << "' x2='" << left + plot_w
       << "' y2='" << top + plot_h << "' stroke='black'/>\n";
    for (int i = 0; i <= 5; ++i) {
        double xv = xmin + (xmax - xmin) * i / 5.0;
        double yv = ymin + (ymax - ymin) * i / 5.0;
        os << "<text x='" << px(xv) << "' y='" << top + plot_h + 18
           << "' text-anchor='middle' font-size='11' font-family='sans-serif'>"
           << fmt(xv) << "</text>\n";
        os << "<text x='" << left - 8 << "' y='" << py(yv) + 4
           << "' text-anchor='end' font-size='11' font-family='sans-serif'>" << fmt(yv)
           << "</text>\n";
        os << "<line x1='" << left << "' y1='" << py(yv) << "' x2='" << left + plot_w
           << "' y2='" << py(yv) << "' stroke='#dddddd'/>\n";
    }
    os << "<text x='" << left + plot_w / 2 << "' y='" << height - 12
       << "' text-anchor='middle' font-size='13' font-family='sans-serif'>" << x_label
       << "</text>\n";
    os << "<text x='16' y='" << top + plot_h / 2
       << "' text-anchor='middle' font-size='13' font-family='sans-serif' "
          "transform='rotate(-90 16 " << top + plot_h / 2 << ")'>" << y_label
       << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
        std::ostringstream pts;
        for (auto [x, y] : series[s].points) pts << px(x) << ',' << py(y) << ' ';
        os << "<polyline fill='none' stroke='" << color << "' stroke-width='2' points='"
           << pts.str() << "'/>\n";
        for (auto [x, y] : series[s].points) {
            os << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='3' fill='"
               << color << "'/>\n";
        }
        os << "<text x='" << left + plot_w - 6 << "' y='" << top + 16 + 16 * s
           << "' text-anchor='end' font-size='12' font-family='sans-serif' fill='"
           << color << "'>" << series[s].name << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace hr
