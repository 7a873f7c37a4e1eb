#ifndef MIXPORT_METRICS_HPP
#define MIXPORT_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixport/channels.hpp"
#include "mixport/teleport.hpp"

namespace mixport {
namespace metrics {

// Squared Hilbert-Schmidt distance Tr((a-b)^2).
double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b);
double hs_distance_sq_mat(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Branch { Phi, Psi, Uniform };
const char* branch_name(Branch branch);

// Closed-form distortions between the input (x, y) and Bob's corrected
// state, per channel family. The names follow the branch split: the Phi
// branch of the rank-2 family gives d1, the Psi branch d2, and so on; the
// rank-4 family distorts every branch identically.
double d1_rank2(double x, double abs_y, double p1);
double d2_rank2(double x, double abs_y, double p1);
double d3_rank3(double x, double abs_y, double p1);
double d4_rank3(double x, double abs_y, double p1);
double d5_rank4(double x, double abs_y, double p1);

// Specializations for the x = 1/2 input class.
double d12_rank2(double abs_y, double p1);
double d34_rank3(double abs_y, double p1);
double d56_rank4(double abs_y, double p1);
double d56_werner(double abs_y, double r);

// Dispatcher used by the CLI; returns nothing for families without a
// closed form (general X-shaped and free-weight channels).
std::optional<double> closed_form(const channels::ChannelSpec& spec, Branch branch, double x,
                                  double abs_y);

// |y|^2 at which d12 and d34 coincide (the crossing point of the two
// distortion curves for p1 < 1/2). At p1 = 1/2 the curves coincide
// identically and the crossing degenerates to 0.
double crossing_y2(double p1);
// Independent root-finding of d12 - d34 = 0 in |y|^2 by bisection on [0, 1/4].
double crossing_y2_bisection(double p1);

// Average Werner-channel distortion over the x = 1/2 input class, computed
// by composite-Simpson quadrature of the pipeline distortion over
// |y| in [0, 1/2] with unit weight.
double werner_average_distortion(double r);

// Distortion of one measured branch computed through the full pipeline.
double pipeline_distortion(const QubitState& input, const channels::Channel& channel,
                           teleport::BellOutcome outcome);

// Channel linear entropies as functions of the weight parameter.
double sl_rank2(double p1);
double sl_rank3(double p1);
double sl_rank4(double p1);

struct DistortionRecord {
    std::string family;
    double param = 0.0;
    double abs_y = 0.0;
    Branch branch = Branch::Uniform;
    double d_pipeline = 0.0;
    std::optional<double> d_closed;
};

// x = 1/2 distortion sweep for one parameterized catalog family
// (mems2 | mems3 | mems4 | werner) over a parameter grid and a |y| grid.
std::vector<DistortionRecord> sweep_distortions(const std::string& family,
                                           const std::vector<double>& params,
                                           const std::vector<double>& ys);

} // namespace metrics
} // namespace mixport

#endif
