#ifndef MIXPORT_TELEPORT_HPP
#define MIXPORT_TELEPORT_HPP

#include <array>
#include <optional>

#include "mixport/channels.hpp"
#include "mixport/density.hpp"

namespace mixport {
namespace teleport {

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

const char* outcome_name(BellOutcome outcome);

// Rank-1 projectors onto |Phi+>, |Phi->, |Psi+>, |Psi->; they sum to I4.
std::array<ComplexMatrix, 4> bell_projectors();
const ComplexMatrix& bell_projector(BellOutcome outcome);

// Bob's fixed correction: Phi+ -> sigma_z, Phi- -> I, Psi+ -> sigma_y,
// Psi- -> sigma_x.
ComplexMatrix correction(BellOutcome outcome);

// An outcome with probability below this threshold has no conditional state.
inline constexpr double kDegenerateProbability = 1e-14;

struct MeasureResult {
    double probability = 0.0;
    bool degenerate = false;
    std::optional<DensityMatrix> bob_raw; // empty iff degenerate
};

// Projects qubits 1,2 of rho1 (x) rho23 onto the Bell outcome and traces
// them out. Tensor layout is (input qubit) (x) (Alice half) (x) (Bob half).
MeasureResult measure(const DensityMatrix& rho1, const DensityMatrix& rho23, BellOutcome outcome,
                      Validation validation = Validation::Strict);

struct TeleportOutcome {
    BellOutcome outcome;
    double probability = 0.0;
    bool degenerate = false;
    std::optional<DensityMatrix> bob_raw;
    std::optional<DensityMatrix> bob_corrected;
};

struct TeleportRun {
    QubitState input;
    channels::ChannelSpec channel;
    std::array<TeleportOutcome, 4> outcomes;
};

TeleportRun run(const QubitState& input, const channels::Channel& channel);

} // namespace teleport
} // namespace mixport

#endif
