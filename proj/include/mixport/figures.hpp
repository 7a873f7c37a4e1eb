#ifndef MIXPORT_FIGURES_HPP
#define MIXPORT_FIGURES_HPP

#include <string>
#include <vector>

namespace mixport {
namespace figures {

// One CSV per figure, schema `param,abs_y,series,value`:
//   fig1  d12 vs |y| at p1 = 0.2
//   fig2  d12, d34 vs |y| at p1 = 0.4 (contains the crossing point)
//   fig3  d12, d34, d56 vs |y| at p1 = 0.6
//   fig4  d12, d34, d56 vs |y| at p1 = 0.8
//   fig5  channel linear entropies vs p1 (abs_y column unused, 0)
// Floats are printed with 17 significant digits so the output is byte-stable.
struct FigureFile {
    std::string name; // e.g. "fig1.csv"
    std::string csv;
};

std::vector<FigureFile> generate_figures();

struct FigureRow {
    double param = 0.0;
    double abs_y = 0.0;
    std::string series;
    double value = 0.0;
};

std::vector<FigureRow> parse_figure_csv(const std::string& csv);

// snprintf "%.17g" with '.' decimal separator.
std::string format_float(double v);

} // namespace figures
} // namespace mixport

#endif
