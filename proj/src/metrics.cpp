#include "mixport/metrics.hpp"

#include <cmath>

namespace mixport {
namespace metrics {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw OutOfRange(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
    }
}

void require_input_params(double x, double abs_y) {
    require_unit_interval(x, "x");
    if (abs_y < 0.0 || abs_y * abs_y > x * (1.0 - x) + kPsdTol) {
        throw OutOfRange("|y| must satisfy |y|^2 <= x(1-x)");
    }
}

double sq(double v) {
    return v * v;
}

} // namespace

double hs_distance_sq_mat(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("hs_distance_sq operands have different dims");
    }
    // Tr(D^2) = sum |D_ij|^2 for Hermitian D = a - b.
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            sum += std::norm(a(i, j) - b(i, j));
        }
    }
    return sum;
}

double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b) {
    return hs_distance_sq_mat(a.mat(), b.mat());
}

const char* branch_name(Branch branch) {
    switch (branch) {
    case Branch::Phi:
        return "Phi";
    case Branch::Psi:
        return "Psi";
    case Branch::Uniform:
        return "Uniform";
    }
    return "?";
}

double d1_rank2(double x, double abs_y, double p1) {
    require_input_params(x, abs_y);
    require_unit_interval(p1, "p1");
    const double n = x * (1.0 - 0.5 * p1) + (1.0 - x) * 0.5 * p1;
    return 2.0 / sq(n) * sq(x) * sq(1.0 - p1) * (sq(x) + sq(abs_y));
}

double d2_rank2(double x, double abs_y, double p1) {
    require_input_params(x, abs_y);
    require_unit_interval(p1, "p1");
    const double n1 = x * 0.5 * p1 + (1.0 - x) * (1.0 - 0.5 * p1);
    return 2.0 / sq(n1) * sq(1.0 - x) * sq(1.0 - p1) * (sq(1.0 - x) + sq(abs_y));
}

double d3_rank3(double x, double abs_y, double p1) {
    require_input_params(x, abs_y);
    require_unit_interval(p1, "p1");
    const double n = x * 0.5 * (1.0 + p1) + (1.0 - x) * 0.5 * (1.0 - p1);
    return 2.0 / sq(n) * (sq(sq(x)) * sq(p1) + sq(abs_y) * sq(1.0 - 2.0 * p1 + p1 * x));
}

double d4_rank3(double x, double abs_y, double p1) {
    require_input_params(x, abs_y);
    require_unit_interval(p1, "p1");
    const double n1 = x * 0.5 * (1.0 - p1) + (1.0 - x) * 0.5 * (1.0 + p1);
    return 2.0 / sq(n1) * (sq(sq(1.0 - x)) * sq(p1) + sq(abs_y) * sq(1.0 - p1 - x * p1));
}

double d5_rank4(double x, double abs_y, double p1) {
    require_input_params(x, abs_y);
    require_unit_interval(p1, "p1");
    return 8.0 * sq(1.0 - p1) * (sq(2.0 * x - 1.0) + 4.0 * sq(abs_y)) / 9.0;
}

double d12_rank2(double abs_y, double p1) {
    return 2.0 * sq(1.0 - p1) * (0.25 + sq(abs_y));
}

double d34_rank3(double abs_y, double p1) {
    return 4.0 * (sq(p1) / 8.0 + 2.0 * sq(abs_y) * sq(1.0 - 1.5 * p1));
}

double d56_rank4(double abs_y, double p1) {
    return 32.0 * sq(1.0 - p1) * sq(abs_y) / 9.0;
}

double d56_werner(double abs_y, double r) {
    return 2.0 * sq(1.0 - r) * sq(abs_y);
}

std::optional<double> closed_form(const channels::ChannelSpec& spec, Branch branch, double x,
                                  double abs_y) {
    using namespace channels;
    if (std::holds_alternative<Meps>(spec)) {
        return 0.0;
    }
    if (const auto* r2 = std::get_if<MemsRank2>(&spec)) {
        return branch == Branch::Psi ? d2_rank2(x, abs_y, r2->p1) : d1_rank2(x, abs_y, r2->p1);
    }
    if (const auto* r3 = std::get_if<MemsRank3>(&spec)) {
        return branch == Branch::Psi ? d4_rank3(x, abs_y, r3->p1) : d3_rank3(x, abs_y, r3->p1);
    }
    if (const auto* r4 = std::get_if<MemsRank4>(&spec)) {
        return d5_rank4(x, abs_y, r4->p1);
    }
    if (const auto* w = std::get_if<Werner>(&spec)) {
        return d5_rank4(x, abs_y, werner_to_mems_p1(w->r));
    }
    return std::nullopt;
}

double crossing_y2(double p1) {
    if (!(p1 >= 0.0 && p1 <= 0.5)) {
        throw OutOfRange("crossing_y2 requires p1 in [0,1/2]");
    }
    if (p1 == 0.5) {
        // d12 and d34 coincide for every |y| at p1 = 1/2.
        return 0.0;
    }
    return (1.0 - 2.0 * p1) / (4.0 * (8.0 * p1 * p1 - 10.0 * p1 + 3.0));
}

double crossing_y2_bisection(double p1) {
    if (!(p1 >= 0.0 && p1 < 0.5)) {
        throw OutOfRange("crossing_y2_bisection requires p1 in [0,1/2)");
    }
    const auto gap = [p1](double y_sq) {
        const double abs_y = std::sqrt(y_sq);
        return d12_rank2(abs_y, p1) - d34_rank3(abs_y, p1);
    };
    double lo = 0.0;  // gap(0) = (1-2*p1)/2 > 0
    double hi = 0.25; // gap(1/4) = -(2*p1-1)^2 < 0
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double pipeline_distortion(const QubitState& input, const channels::Channel& channel,
                           teleport::BellOutcome outcome) {
    const DensityMatrix rho1 = from_qubit(input);
    const Validation validation =
        channel.physical ? Validation::Strict : Validation::AllowNonPsd;
    const teleport::MeasureResult m =
        teleport::measure(rho1, channel.state, outcome, validation);
    if (m.degenerate) {
        throw InvalidState("degenerate outcome has no conditional state");
    }
    const ComplexMatrix u = teleport::correction(outcome);
    const ComplexMatrix corrected = u * m.bob_raw->mat() * adjoint(u);
    return hs_distance_sq_mat(rho1.mat(), corrected);
}

double werner_average_distortion(double r) {
    require_unit_interval(r, "r");
    const channels::Channel channel = channels::build(channels::Werner{r});
    const auto integrand = [&channel](double abs_y) {
        return pipeline_distortion(QubitState(0.5, Complex(abs_y, 0.0)), channel,
                                   teleport::BellOutcome::PhiPlus);
    };
    // Composite Simpson on [0, 1/2]; the integrand is quadratic in |y|, so
    // this is exact up to rounding.
    const int intervals = 100;
    const double h = 0.5 / intervals;
    double sum = integrand(0.0) + integrand(0.5);
    for (int k = 1; k < intervals; ++k) {
        sum += integrand(k * h) * ((k % 2 == 1) ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

double sl_rank2(double p1) {
    require_unit_interval(p1, "p1");
    return (8.0 / 3.0) * p1 * (1.0 - p1);
}

double sl_rank3(double p1) {
    require_unit_interval(p1, "p1");
    return (8.0 / 3.0) * p1 * (2.0 - 3.0 * p1);
}

double sl_rank4(double p1) {
    require_unit_interval(p1, "p1");
    return (4.0 / 3.0) * (1.0 - p1 * p1 - sq(1.0 - p1) / 3.0);
}

std::vector<DistortionRecord> sweep_distortions(const std::string& family,
                                           const std::vector<double>& params,
                                           const std::vector<double>& ys) {
    using namespace channels;
    std::vector<DistortionRecord> out;
    for (const double param : params) {
        ChannelSpec spec;
        if (family == "mems2") {
            spec = MemsRank2{param};
        } else if (family == "mems3") {
            spec = MemsRank3{param};
        } else if (family == "mems4") {
            spec = MemsRank4{param};
        } else if (family == "werner") {
            spec = Werner{param};
        } else {
            throw InvalidParams("sweep supports mems2|mems3|mems4|werner, got '" + family + "'");
        }
        const Channel channel = build(spec);
        const bool split_branches = family == "mems2" || family == "mems3";
        for (const double abs_y : ys) {
            const QubitState input(0.5, Complex(abs_y, 0.0));
            if (split_branches) {
                for (const Branch branch : {Branch::Phi, Branch::Psi}) {
                    DistortionRecord rec{family, param, abs_y, branch, 0.0, std::nullopt};
                    rec.d_pipeline = pipeline_distortion(
                        input, channel,
                        branch == Branch::Phi ? teleport::BellOutcome::PhiPlus
                                              : teleport::BellOutcome::PsiPlus);
                    rec.d_closed = closed_form(spec, branch, 0.5, abs_y);
                    out.push_back(std::move(rec));
                }
            } else {
                DistortionRecord rec{family, param, abs_y, Branch::Uniform, 0.0, std::nullopt};
                rec.d_pipeline =
                    pipeline_distortion(input, channel, teleport::BellOutcome::PhiPlus);
                rec.d_closed = closed_form(spec, Branch::Uniform, 0.5, abs_y);
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

} // namespace metrics
} // namespace mixport
