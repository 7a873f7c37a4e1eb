#include "mixport/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mixport/entanglement.hpp"
#include "mixport/metrics.hpp"
#include "mixport/teleport.hpp"

namespace mixport {
namespace verify {

namespace {

constexpr double kOracleTol = 1e-12;

QubitState random_qubit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double x = uni(rng);
    const double frac = uni(rng);
    const double theta = 2.0 * std::numbers::pi * uni(rng);
    const double mag = frac * std::sqrt(std::max(x * (1.0 - x), 0.0));
    return QubitState(x, Complex(mag * std::cos(theta), mag * std::sin(theta)));
}

void record(SuiteResult& suite, bool ok, double err = 0.0) {
    suite.checks += 1;
    if (!ok) {
        suite.failures += 1;
    }
    suite.max_abs_err = std::max(suite.max_abs_err, err);
}

void record_err(SuiteResult& suite, double err, double tol) {
    record(suite, err <= tol, err);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    }
    return out;
}

std::vector<channels::Channel> catalog_channels() {
    using namespace channels;
    std::vector<Channel> out;
    out.push_back(build(Meps{}));
    for (const double p1 : {0.5, 0.7, 0.9, 1.0}) {
        out.push_back(build(MemsRank2{p1}));
    }
    for (const double p1 : {1.0 / 3.0, 0.4, 0.45, 0.5}) {
        out.push_back(build(MemsRank3{p1}));
    }
    for (const double p1 : {0.25, 0.5, 0.75, 1.0}) {
        out.push_back(build(MemsRank4{p1}));
    }
    for (const double r : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
        out.push_back(build(Werner{r}));
    }
    return out;
}

} // namespace

SuiteResult meps_exactness_suite(const channels::Channel& channel, std::uint64_t seed,
                                 int inputs) {
    SuiteResult suite{"meps_exactness", true, 0, 0, 0.0, {}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < inputs; ++k) {
        const QubitState input = random_qubit(rng);
        const DensityMatrix rho1 = from_qubit(input);
        const teleport::TeleportRun run = teleport::run(input, channel);
        for (const auto& outcome : run.outcomes) {
            if (outcome.degenerate) {
                record(suite, false);
                continue;
            }
            record_err(suite, metrics::hs_distance_sq(rho1, *outcome.bob_corrected), 1e-24);
        }
    }
    return suite;
}

SuiteResult distortion_oracle_suite() {
    using namespace channels;
    SuiteResult suite{"distortion_oracle_grid", true, 0, 0, 0.0, {}};

    struct FamilyGrid {
        ChannelSpec spec_template;
        std::vector<double> params;
    };
    const std::vector<FamilyGrid> grids = {
        {MemsRank2{0.0}, {0.5, 0.6, 0.75, 0.9, 1.0}},
        {MemsRank3{0.0}, {1.0 / 3.0, 0.38, 0.42, 0.46, 0.5}},
        {MemsRank4{0.0}, {0.25, 0.4, 0.55, 0.7, 0.9}},
        {Werner{0.0}, {0.0, 0.25, 0.5, 0.75, 1.0}},
    };
    const std::vector<double> xs = {0.1, 0.3, 0.5, 0.7, 0.9};
    const std::vector<double> y_fracs = {0.0, 0.35, 0.7, 0.95};
    const std::vector<double> args = linspace(0.0, 2.0 * std::numbers::pi * 7.0 / 8.0, 8);

    for (const FamilyGrid& grid : grids) {
        for (const double param : grid.params) {
            ChannelSpec spec = grid.spec_template;
            if (auto* r2 = std::get_if<MemsRank2>(&spec)) {
                r2->p1 = param;
            } else if (auto* r3 = std::get_if<MemsRank3>(&spec)) {
                r3->p1 = param;
            } else if (auto* r4 = std::get_if<MemsRank4>(&spec)) {
                r4->p1 = param;
            } else if (auto* w = std::get_if<Werner>(&spec)) {
                w->r = param;
            }
            const Channel channel = build(spec);
            for (const double x : xs) {
                for (const double frac : y_fracs) {
                    const double mag = frac * std::sqrt(x * (1.0 - x));
                    for (const double arg : args) {
                        const QubitState input(
                            x, Complex(mag * std::cos(arg), mag * std::sin(arg)));
                        for (const metrics::Branch branch :
                             {metrics::Branch::Phi, metrics::Branch::Psi}) {
                            const teleport::BellOutcome outcome =
                                branch == metrics::Branch::Phi ? teleport::BellOutcome::PhiPlus
                                                               : teleport::BellOutcome::PsiMinus;
                            const double piped =
                                metrics::pipeline_distortion(input, channel, outcome);
                            const double closed =
                                *metrics::closed_form(spec, branch, x, mag);
                            record_err(suite, std::abs(piped - closed), kOracleTol);
                        }
                        if (x == 0.5) {
                            // x = 1/2 specializations of the same forms.
                            double special = 0.0;
                            if (const auto* r2c = std::get_if<MemsRank2>(&spec)) {
                                special = metrics::d12_rank2(mag, r2c->p1);
                            } else if (const auto* r3c = std::get_if<MemsRank3>(&spec)) {
                                special = metrics::d34_rank3(mag, r3c->p1);
                            } else if (const auto* r4c = std::get_if<MemsRank4>(&spec)) {
                                special = metrics::d56_rank4(mag, r4c->p1);
                            } else {
                                special = metrics::d56_werner(mag, std::get<Werner>(spec).r);
                            }
                            const double piped = metrics::pipeline_distortion(
                                input, channel, teleport::BellOutcome::PhiMinus);
                            record_err(suite, std::abs(piped - special), kOracleTol);
                        }
                    }
                }
            }
        }
    }
    return suite;
}

SuiteResult concurrence_identity_suite() {
    using namespace channels;
    SuiteResult suite{"concurrence_identities", true, 0, 0, 0.0, {}};
    for (const double p1 : linspace(0.5, 1.0, 50)) {
        const double c = entanglement::concurrence(build(MemsRank2{p1}).state);
        record_err(suite, std::abs(c - p1), kOracleTol);
    }
    for (const double p1 : linspace(1.0 / 3.0, 0.5, 50)) {
        const double c = entanglement::concurrence(build(MemsRank3{p1}).state);
        record_err(suite, std::abs(c - std::max(0.0, 3.0 * p1 - 1.0)), kOracleTol);
    }
    for (const double p1 : linspace(0.25, 1.0, 50)) {
        const double c = entanglement::concurrence(build(MemsRank4{p1}).state);
        record_err(suite, std::abs(c - std::max(0.0, 2.0 * p1 - 1.0)), kOracleTol);
    }
    record_err(suite, std::abs(entanglement::concurrence(build(Meps{}).state) - 1.0), kOracleTol);
    for (const double r : linspace(0.0, 1.0, 50)) {
        const double cw = entanglement::concurrence(build(Werner{r}).state);
        const double c4 =
            entanglement::concurrence(build(MemsRank4{werner_to_mems_p1(r)}).state);
        record_err(suite, std::abs(cw - c4), kOracleTol);
    }
    return suite;
}

SuiteResult entropy_identity_suite() {
    using namespace channels;
    SuiteResult suite{"entropy_identities", true, 0, 0, 0.0, {}};
    for (const double abs_y : linspace(0.0, 0.5, 26)) {
        const double sl = entanglement::linear_entropy(from_qubit(QubitState(0.5, abs_y)));
        record_err(suite, std::abs(sl - (8.0 / 3.0) * (0.25 - abs_y * abs_y)), kOracleTol);
    }
    for (const double p1 : linspace(0.0, 1.0, 21)) {
        record_err(suite,
                   std::abs(metrics::sl_rank2(p1) -
                            entanglement::linear_entropy(build(MemsRank2{p1}).state)),
                   kOracleTol);
        record_err(suite,
                   std::abs(metrics::sl_rank4(p1) -
                            entanglement::linear_entropy(build(MemsRank4{p1}).state)),
                   kOracleTol);
    }
    for (const double p1 : linspace(0.0, 2.0 / 3.0, 21)) {
        record_err(suite,
                   std::abs(metrics::sl_rank3(p1) -
                            entanglement::linear_entropy_mat(build(MemsRank3{p1}).state.mat())),
                   kOracleTol);
    }
    // Intersection point of the rank-2 and rank-3 entropies.
    record_err(suite, std::abs(metrics::sl_rank2(0.5) - 2.0 / 3.0), kOracleTol);
    record_err(suite, std::abs(metrics::sl_rank3(0.5) - 2.0 / 3.0), kOracleTol);
    // Orderings on both sides of p1 = 1/2.
    for (const double p1 : {0.35, 0.4, 0.45}) {
        record(suite, metrics::sl_rank2(p1) < metrics::sl_rank3(p1) &&
                          metrics::sl_rank3(p1) < metrics::sl_rank4(p1));
    }
    for (const double p1 : {0.55, 0.6, 0.65}) {
        record(suite, metrics::sl_rank3(p1) < metrics::sl_rank2(p1) &&
                          metrics::sl_rank2(p1) < metrics::sl_rank4(p1));
    }
    return suite;
}

SuiteResult peres_horodecki_suite(std::uint64_t seed, long samples) {
    SuiteResult suite{"peres_horodecki", true, 0, 0, 0.0, {}};
    constexpr double kZeroBand = 1e-10;
    for (const channels::Channel& channel : catalog_channels()) {
        const double c = entanglement::concurrence(channel.state);
        const double pt = entanglement::min_pt_eigenvalue(channel.state);
        record(suite, (c > kZeroBand) == (pt < -kZeroBand));
    }
    {
        // Separability boundary of the Werner family.
        const channels::Channel boundary = channels::build(channels::Werner{1.0 / 3.0});
        const double c = entanglement::concurrence(boundary.state);
        const double pt = entanglement::min_pt_eigenvalue(boundary.state);
        record_err(suite, std::abs(c), kZeroBand);
        record_err(suite, std::abs(pt), kZeroBand);
    }
    std::mt19937_64 rng(seed + 17);
    for (long k = 0; k < samples; ++k) {
        const DensityMatrix rho(blockprops::random_psd(4, rng), Dims{2, 2});
        const double c = entanglement::concurrence(rho);
        const double pt = entanglement::min_pt_eigenvalue(rho);
        record(suite, (c > kZeroBand) == (pt < -kZeroBand));
    }
    return suite;
}

SuiteResult probability_completeness_suite(std::uint64_t seed) {
    SuiteResult suite{"probability_completeness", true, 0, 0, 0.0, {}};
    std::mt19937_64 rng(seed + 29);
    for (const channels::Channel& channel : catalog_channels()) {
        for (int k = 0; k < 8; ++k) {
            const QubitState input = random_qubit(rng);
            const teleport::TeleportRun run = teleport::run(input, channel);
            double total = 0.0;
            bool nonneg = true;
            for (const auto& outcome : run.outcomes) {
                total += outcome.probability;
                nonneg = nonneg && outcome.probability >= 0.0;
            }
            record_err(suite, std::abs(total - 1.0), 1e-12);
            record(suite, nonneg);
        }
    }
    return suite;
}

SuiteResult werner_average_suite() {
    SuiteResult suite{"werner_average", true, 0, 0, 0.0, {}};
    for (const double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double expected = (1.0 - r) * (1.0 - r) / 12.0;
        record_err(suite, std::abs(metrics::werner_average_distortion(r) - expected), 1e-9);
    }
    return suite;
}

SuiteResult crossing_point_suite() {
    SuiteResult suite{"crossing_points", true, 0, 0, 0.0, {}};
    for (const double p1 : {0.1, 0.2, 0.3, 0.4, 0.45}) {
        const double root = metrics::crossing_y2_bisection(p1);
        const double analytic = metrics::crossing_y2(p1);
        record_err(suite, std::abs(root - analytic), 1e-10);
        // d34 below d12 before the crossing, above it after.
        const double y_lo = std::sqrt(root * 0.5);
        const double y_hi = std::sqrt(root + (0.25 - root) * 0.5);
        record(suite,
               metrics::d34_rank3(y_lo, p1) <= metrics::d12_rank2(y_lo, p1) + 1e-12);
        record(suite, metrics::d12_rank2(y_hi, p1) < metrics::d34_rank3(y_hi, p1));
    }
    return suite;
}

VerifyReport run_all(std::uint64_t seed, long samples) {
    VerifyReport report;
    report.seed = seed;
    report.samples = samples;
    report.properties = blockprops::run_all_suites(blockprops::SuiteConfig{seed, samples});
    report.suites.push_back(meps_exactness_suite(channels::build(channels::Meps{}), seed));
    report.suites.push_back(distortion_oracle_suite());
    report.suites.push_back(concurrence_identity_suite());
    report.suites.push_back(entropy_identity_suite());
    report.suites.push_back(peres_horodecki_suite(seed, samples));
    report.suites.push_back(probability_completeness_suite(seed));
    report.suites.push_back(werner_average_suite());
    report.suites.push_back(crossing_point_suite());
    return report;
}

bool all_asserted_pass(const VerifyReport& report) {
    for (const auto& property : report.properties) {
        if (blockprops::property_asserted(property.property_id) && property.violations != 0) {
            return false;
        }
        if (property.property_id == blockprops::PropertyId::P3DetChain) {
            for (const auto& link : property.links) {
                if (link.name == "fischer" && link.violations != 0) {
                    return false;
                }
            }
        }
    }
    for (const auto& suite : report.suites) {
        if (suite.asserted && suite.failures != 0) {
            return false;
        }
    }
    return true;
}

} // namespace verify
} // namespace mixport
