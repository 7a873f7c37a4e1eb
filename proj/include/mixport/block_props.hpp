#ifndef MIXPORT_BLOCK_PROPS_HPP
#define MIXPORT_BLOCK_PROPS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixport/density.hpp"

namespace mixport {
namespace blockprops {

// Positivity properties of block-partitioned density matrices, run as
// executable predicates over randomized PSD samples. P1-forward, the PSD-ness
// of the block-trace matrix, the trace chain and the Fischer bound are
// asserted; the P1 converse and the determinant inequalities below the
// Fischer bound are claims under test, so the harness records their
// counterexamples instead of failing on them.
enum class PropertyId {
    P1Forward,
    P1Converse,
    P2Det,
    P2Trace,
    P3TraceChain,
    P3DetChain,
};

const char* property_name(PropertyId id);

// Whether a zero-violation count is required of an untampered build.
bool property_asserted(PropertyId id);

struct LinkStat {
    std::string name;
    long violations = 0;
    double worst_margin = 0.0;
};

struct PropertyReport {
    PropertyId property_id;
    long samples = 0;
    long violations = 0;
    // Smallest inequality slack seen over all samples and links; a value
    // below -kMarginSlack counts as a violation.
    double worst_margin = 0.0;
    std::optional<ComplexMatrix> witness;
    Dims witness_dims{1, 1};
    std::vector<LinkStat> links;
};

// Slack granted before an inequality counts as violated; determinant chains
// are ill-conditioned near rank deficiency.
inline constexpr double kMarginSlack = 1e-12;

enum class P1Direction { Forward, Converse };

ComplexMatrix block(const ComplexMatrix& m, Dims dims, int i, int j);

// Single-matrix checks. They accept raw Hermitian matrices because the P1
// converse is probed with matrices that are deliberately not PSD.
PropertyReport check_p1(const ComplexMatrix& m, Dims dims, P1Direction direction);
std::pair<PropertyReport, PropertyReport> check_p2(const ComplexMatrix& m, Dims dims);
std::pair<PropertyReport, PropertyReport> check_p3(const ComplexMatrix& m, Dims dims);

// The block-trace matrix of P2; bit-identical to partial_trace(keep=A).
ComplexMatrix block_trace_matrix(const ComplexMatrix& m, Dims dims);

// Wishart-style sample: G G^dagger normalized to unit trace, G with
// independent standard-normal real and imaginary parts.
ComplexMatrix random_psd(int dim, std::mt19937_64& rng);

// The classic P1-converse counterexample: [[1,2],[2,1]] blocked as 2 (x) 1.
// PSD diagonal blocks, full-matrix eigenvalues {3, -1}.
ComplexMatrix p1_converse_witness();

struct SuiteConfig {
    std::uint64_t seed = 12345;
    long samples = 1000;
};

PropertyReport run_p1_forward_suite(const SuiteConfig& cfg, Dims dims);
PropertyReport run_p1_converse_suite(const SuiteConfig& cfg, Dims dims);
std::pair<PropertyReport, PropertyReport> run_p2_suite(const SuiteConfig& cfg, Dims dims);
std::pair<PropertyReport, PropertyReport> run_p3_suite(const SuiteConfig& cfg, Dims dims);

// Every property over the default shapes (2x2 blocks for P1/P2, 2 (x) 2 and
// 2 (x) 3 for P3); deterministic for a fixed seed.
std::vector<PropertyReport> run_all_suites(const SuiteConfig& cfg);

} // namespace blockprops
} // namespace mixport

#endif
