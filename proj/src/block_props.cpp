#include "mixport/block_props.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mixport {
namespace blockprops {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_blocked(const ComplexMatrix& m, Dims dims) {
    if (dims.a < 2 || dims.b < 1 || dims.a * dims.b != m.dim()) {
        throw NotBipartite("block structure " + std::to_string(dims.a) + " (x) " +
                           std::to_string(dims.b) + " does not match matrix dim " +
                           std::to_string(m.dim()));
    }
    if (m.hermiticity_defect() > kHermTol) {
        throw NotHermitian("block property checks require a Hermitian matrix");
    }
}

double min_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigenvalues(m).back();
}

PropertyReport make_report(PropertyId id) {
    PropertyReport r;
    r.property_id = id;
    r.worst_margin = kInf;
    return r;
}

// Folds one sample margin (optionally with per-link margins) into a report
// and keeps the first violating sample as witness.
void fold_sample(PropertyReport& report, const ComplexMatrix& m, Dims dims, double margin,
                 const std::vector<std::pair<std::string, double>>& link_margins = {}) {
    report.samples += 1;
    report.worst_margin = std::min(report.worst_margin, margin);
    const bool violated = margin < -kMarginSlack;
    if (violated) {
        report.violations += 1;
        if (!report.witness) {
            report.witness = m;
            report.witness_dims = dims;
        }
    }
    for (const auto& [name, link_margin] : link_margins) {
        auto it = std::find_if(report.links.begin(), report.links.end(),
                               [&name](const LinkStat& l) { return l.name == name; });
        if (it == report.links.end()) {
            report.links.push_back(LinkStat{name, 0, kInf});
            it = std::prev(report.links.end());
        }
        it->worst_margin = std::min(it->worst_margin, link_margin);
        if (link_margin < -kMarginSlack) {
            it->violations += 1;
        }
    }
}

double p1_forward_margin(const ComplexMatrix& m, Dims dims) {
    double margin = kInf;
    for (int i = 0; i < dims.a; ++i) {
        margin = std::min(margin, min_eigenvalue(block(m, dims, i, i)));
    }
    return margin;
}

double p1_converse_margin(const ComplexMatrix& m, Dims /*dims*/) {
    return min_eigenvalue(m);
}

struct P2Margins {
    double det_chain;
    double trace_psd;
};

P2Margins p2_margins(const ComplexMatrix& m, Dims dims) {
    ComplexMatrix det_matrix(dims.a);
    for (int i = 0; i < dims.a; ++i) {
        for (int j = 0; j < dims.a; ++j) {
            det_matrix(i, j) = determinant(block(m, dims, i, j));
        }
    }
    const double det_of_dets = determinant(det_matrix).real();
    const double det_full = determinant(m).real();
    return P2Margins{det_full - det_of_dets, min_eigenvalue(block_trace_matrix(m, dims))};
}

struct P3Margins {
    double frob_vs_sqrt;   // sqrt(tr r00^2 tr r11^2) - tr(r01^dag r01)
    double sqrt_vs_traces; // tr r00 tr r11 - sqrt(tr r00^2 tr r11^2)
    double det_nonneg;     // det r00 det r11 - |det r01|^2
    double det_lower;      // det r_AB - (det r00 det r11 - |det r01|^2)
    double fischer;        // det r00 det r11 - det r_AB
};

P3Margins p3_margins(const ComplexMatrix& m, Dims dims) {
    if (dims.a != 2) {
        throw WrongShape("P3 applies to 2 (x) d partitions");
    }
    const ComplexMatrix r00 = block(m, dims, 0, 0);
    const ComplexMatrix r01 = block(m, dims, 0, 1);
    const ComplexMatrix r11 = block(m, dims, 1, 1);

    const double frob_sq = trace(adjoint(r01) * r01).real();
    const double tr00_sq = trace(r00 * r00).real();
    const double tr11_sq = trace(r11 * r11).real();
    const double mid = std::sqrt(std::max(tr00_sq * tr11_sq, 0.0));
    const double traces = trace(r00).real() * trace(r11).real();

    const double det00 = determinant(r00).real();
    const double det11 = determinant(r11).real();
    const double det01_sq = std::norm(determinant(r01));
    const double det_full = determinant(m).real();
    const double lower = det00 * det11 - det01_sq;

    return P3Margins{mid - frob_sq, traces - mid, lower, det_full - lower,
                     det00 * det11 - det_full};
}

} // namespace

const char* property_name(PropertyId id) {
    switch (id) {
    case PropertyId::P1Forward:
        return "P1_forward";
    case PropertyId::P1Converse:
        return "P1_converse";
    case PropertyId::P2Det:
        return "P2_det";
    case PropertyId::P2Trace:
        return "P2_trace";
    case PropertyId::P3TraceChain:
        return "P3_trace_chain";
    case PropertyId::P3DetChain:
        return "P3_det_chain";
    }
    return "?";
}

bool property_asserted(PropertyId id) {
    switch (id) {
    case PropertyId::P1Forward:
    case PropertyId::P2Trace:
    case PropertyId::P3TraceChain:
        return true;
    // For the det chain only the Fischer link is asserted; the full-chain
    // violation count includes the claims under test.
    case PropertyId::P3DetChain:
    case PropertyId::P1Converse:
    case PropertyId::P2Det:
        return false;
    }
    return false;
}

ComplexMatrix block(const ComplexMatrix& m, Dims dims, int i, int j) {
    require_blocked(m, dims);
    ComplexMatrix out(dims.b);
    for (int k = 0; k < dims.b; ++k) {
        for (int l = 0; l < dims.b; ++l) {
            out(k, l) = m(i * dims.b + k, j * dims.b + l);
        }
    }
    return out;
}

ComplexMatrix block_trace_matrix(const ComplexMatrix& m, Dims dims) {
    require_blocked(m, dims);
    ComplexMatrix out(dims.a);
    for (int i = 0; i < dims.a; ++i) {
        for (int j = 0; j < dims.a; ++j) {
            Complex sum = 0.0;
            for (int k = 0; k < dims.b; ++k) {
                sum += m(i * dims.b + k, j * dims.b + k);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

PropertyReport check_p1(const ComplexMatrix& m, Dims dims, P1Direction direction) {
    require_blocked(m, dims);
    PropertyReport report =
        make_report(direction == P1Direction::Forward ? PropertyId::P1Forward
                                                      : PropertyId::P1Converse);
    const double margin = direction == P1Direction::Forward ? p1_forward_margin(m, dims)
                                                            : p1_converse_margin(m, dims);
    fold_sample(report, m, dims, margin);
    return report;
}

std::pair<PropertyReport, PropertyReport> check_p2(const ComplexMatrix& m, Dims dims) {
    require_blocked(m, dims);
    PropertyReport det_report = make_report(PropertyId::P2Det);
    PropertyReport trace_report = make_report(PropertyId::P2Trace);
    const P2Margins margins = p2_margins(m, dims);
    fold_sample(det_report, m, dims, margins.det_chain);
    fold_sample(trace_report, m, dims, margins.trace_psd);
    return {det_report, trace_report};
}

std::pair<PropertyReport, PropertyReport> check_p3(const ComplexMatrix& m, Dims dims) {
    require_blocked(m, dims);
    PropertyReport trace_report = make_report(PropertyId::P3TraceChain);
    PropertyReport det_report = make_report(PropertyId::P3DetChain);
    const P3Margins margins = p3_margins(m, dims);
    fold_sample(trace_report, m, dims, std::min(margins.frob_vs_sqrt, margins.sqrt_vs_traces),
                {{"frob_vs_sqrt", margins.frob_vs_sqrt},
                 {"sqrt_vs_traces", margins.sqrt_vs_traces}});
    fold_sample(det_report, m, dims,
                std::min({margins.det_nonneg, margins.det_lower, margins.fischer}),
                {{"nonneg", margins.det_nonneg},
                 {"lower_vs_det", margins.det_lower},
                 {"fischer", margins.fischer}});
    return {trace_report, det_report};
}

ComplexMatrix random_psd(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    ComplexMatrix w = g * adjoint(g);
    const double t = trace(w).real();
    return (1.0 / t) * w;
}

ComplexMatrix p1_converse_witness() {
    return ComplexMatrix(2, {1.0, 2.0, 2.0, 1.0});
}

PropertyReport run_p1_forward_suite(const SuiteConfig& cfg, Dims dims) {
    std::mt19937_64 rng(cfg.seed);
    PropertyReport report = make_report(PropertyId::P1Forward);
    for (long k = 0; k < cfg.samples; ++k) {
        const ComplexMatrix m = random_psd(dims.a * dims.b, rng);
        fold_sample(report, m, dims, p1_forward_margin(m, dims));
    }
    return report;
}

PropertyReport run_p1_converse_suite(const SuiteConfig& cfg, Dims dims) {
    std::mt19937_64 rng(cfg.seed + 1);
    PropertyReport report = make_report(PropertyId::P1Converse);
    // Sample 0 is the canonical counterexample.
    const ComplexMatrix canonical = p1_converse_witness();
    fold_sample(report, canonical, Dims{2, 1}, p1_converse_margin(canonical, Dims{2, 1}));
    for (long k = 1; k < cfg.samples; ++k) {
        // PSD sample with its off-diagonal blocks doubled: diagonal blocks
        // stay PSD, the whole matrix often stops being PSD.
        ComplexMatrix m = random_psd(dims.a * dims.b, rng);
        for (int i = 0; i < dims.a; ++i) {
            for (int j = 0; j < dims.a; ++j) {
                if (i == j) {
                    continue;
                }
                for (int k2 = 0; k2 < dims.b; ++k2) {
                    for (int l = 0; l < dims.b; ++l) {
                        m(i * dims.b + k2, j * dims.b + l) *= 2.0;
                    }
                }
            }
        }
        fold_sample(report, m, dims, p1_converse_margin(m, dims));
    }
    return report;
}

std::pair<PropertyReport, PropertyReport> run_p2_suite(const SuiteConfig& cfg, Dims dims) {
    std::mt19937_64 rng(cfg.seed + 2);
    PropertyReport det_report = make_report(PropertyId::P2Det);
    PropertyReport trace_report = make_report(PropertyId::P2Trace);
    for (long k = 0; k < cfg.samples; ++k) {
        const ComplexMatrix m = random_psd(dims.a * dims.b, rng);
        const P2Margins margins = p2_margins(m, dims);
        fold_sample(det_report, m, dims, margins.det_chain);
        fold_sample(trace_report, m, dims, margins.trace_psd);
    }
    return {det_report, trace_report};
}

std::pair<PropertyReport, PropertyReport> run_p3_suite(const SuiteConfig& cfg, Dims dims) {
    std::mt19937_64 rng(cfg.seed + 3 + dims.b);
    PropertyReport trace_report = make_report(PropertyId::P3TraceChain);
    PropertyReport det_report = make_report(PropertyId::P3DetChain);
    for (long k = 0; k < cfg.samples; ++k) {
        const ComplexMatrix m = random_psd(dims.a * dims.b, rng);
        const P3Margins margins = p3_margins(m, dims);
        fold_sample(trace_report, m, dims, std::min(margins.frob_vs_sqrt, margins.sqrt_vs_traces),
                    {{"frob_vs_sqrt", margins.frob_vs_sqrt},
                     {"sqrt_vs_traces", margins.sqrt_vs_traces}});
        fold_sample(det_report, m, dims,
                    std::min({margins.det_nonneg, margins.det_lower, margins.fischer}),
                    {{"nonneg", margins.det_nonneg},
                     {"lower_vs_det", margins.det_lower},
                     {"fischer", margins.fischer}});
    }
    return {trace_report, det_report};
}

std::vector<PropertyReport> run_all_suites(const SuiteConfig& cfg) {
    std::vector<PropertyReport> out;
    out.push_back(run_p1_forward_suite(cfg, Dims{2, 2}));
    out.push_back(run_p1_converse_suite(cfg, Dims{2, 2}));
    auto [p2_det, p2_trace] = run_p2_suite(cfg, Dims{2, 2});
    out.push_back(std::move(p2_det));
    out.push_back(std::move(p2_trace));
    for (const int d : {2, 3}) {
        auto [p3_trace, p3_det] = run_p3_suite(cfg, Dims{2, d});
        out.push_back(std::move(p3_trace));
        out.push_back(std::move(p3_det));
    }
    return out;
}

} // namespace blockprops
} // namespace mixport
