#include "mixport/figures.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mixport/metrics.hpp"

namespace mixport {
namespace figures {

namespace {

constexpr int kPoints = 101;

double grid_point(double lo, double hi, int i) {
    return lo + (hi - lo) * i / (kPoints - 1);
}

void append_row(std::string& csv, double param, double abs_y, const char* series, double value) {
    csv += format_float(param);
    csv += ',';
    csv += format_float(abs_y);
    csv += ',';
    csv += series;
    csv += ',';
    csv += format_float(value);
    csv += '\n';
}

std::string distortion_figure(double p1, bool with_d34, bool with_d56) {
    std::string csv = "param,abs_y,series,value\n";
    for (int i = 0; i < kPoints; ++i) {
        const double abs_y = grid_point(0.0, 0.5, i);
        append_row(csv, p1, abs_y, "D12", metrics::d12_rank2(abs_y, p1));
        if (with_d34) {
            append_row(csv, p1, abs_y, "D34", metrics::d34_rank3(abs_y, p1));
        }
        if (with_d56) {
            append_row(csv, p1, abs_y, "D56", metrics::d56_rank4(abs_y, p1));
        }
    }
    return csv;
}

std::string entropy_figure() {
    std::string csv = "param,abs_y,series,value\n";
    for (int i = 0; i < kPoints; ++i) {
        const double p1 = grid_point(0.0, 1.0, i);
        append_row(csv, p1, 0.0, "SL_r2", metrics::sl_rank2(p1));
    }
    // The rank-3 entropy is plotted up to p1 = 2/3 where it reaches zero.
    for (int i = 0; i < kPoints; ++i) {
        const double p1 = grid_point(0.0, 2.0 / 3.0, i);
        append_row(csv, p1, 0.0, "SL_r3", metrics::sl_rank3(p1));
    }
    for (int i = 0; i < kPoints; ++i) {
        const double p1 = grid_point(0.0, 1.0, i);
        append_row(csv, p1, 0.0, "SL_r4", metrics::sl_rank4(p1));
    }
    return csv;
}

} // namespace

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<FigureFile> generate_figures() {
    return {
        {"fig1.csv", distortion_figure(0.2, false, false)},
        {"fig2.csv", distortion_figure(0.4, true, false)},
        {"fig3.csv", distortion_figure(0.6, true, true)},
        {"fig4.csv", distortion_figure(0.8, true, true)},
        {"fig5.csv", entropy_figure()},
    };
}

std::vector<FigureRow> parse_figure_csv(const std::string& csv) {
    std::vector<FigureRow> rows;
    std::istringstream stream(csv);
    std::string line;
    bool header = true;
    while (std::getline(stream, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        FigureRow row;
        std::istringstream fields(line);
        std::string field;
        std::getline(fields, field, ',');
        row.param = std::stod(field);
        std::getline(fields, field, ',');
        row.abs_y = std::stod(field);
        std::getline(fields, row.series, ',');
        std::getline(fields, field, ',');
        row.value = std::stod(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace figures
} // namespace mixport
