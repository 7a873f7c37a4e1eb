#include "mixport/teleport.hpp"

#include <cmath>
#include <numbers>

namespace mixport {
namespace teleport {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix projector_from_amplitudes(Complex a0, Complex a1, Complex a2, Complex a3) {
    const std::array<Complex, 4> v{a0, a1, a2, a3};
    ComplexMatrix p(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            p(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
        }
    }
    return p;
}

const std::array<ComplexMatrix, 4>& projector_table() {
    static const std::array<ComplexMatrix, 4> table = {
        projector_from_amplitudes(kInvSqrt2, 0.0, 0.0, kInvSqrt2),  // |Phi+>
        projector_from_amplitudes(kInvSqrt2, 0.0, 0.0, -kInvSqrt2), // |Phi->
        projector_from_amplitudes(0.0, kInvSqrt2, kInvSqrt2, 0.0),  // |Psi+>
        projector_from_amplitudes(0.0, kInvSqrt2, -kInvSqrt2, 0.0), // |Psi->
    };
    return table;
}

} // namespace

const char* outcome_name(BellOutcome outcome) {
    switch (outcome) {
    case BellOutcome::PhiPlus:
        return "Phi+";
    case BellOutcome::PhiMinus:
        return "Phi-";
    case BellOutcome::PsiPlus:
        return "Psi+";
    case BellOutcome::PsiMinus:
        return "Psi-";
    }
    return "?";
}

std::array<ComplexMatrix, 4> bell_projectors() {
    return projector_table();
}

const ComplexMatrix& bell_projector(BellOutcome outcome) {
    return projector_table()[static_cast<std::size_t>(outcome)];
}

ComplexMatrix correction(BellOutcome outcome) {
    ComplexMatrix u(2);
    switch (outcome) {
    case BellOutcome::PhiPlus: // sigma_z
        u(0, 0) = 1.0;
        u(1, 1) = -1.0;
        break;
    case BellOutcome::PhiMinus: // identity
        u(0, 0) = 1.0;
        u(1, 1) = 1.0;
        break;
    case BellOutcome::PsiPlus: // sigma_y
        u(0, 1) = Complex(0.0, -1.0);
        u(1, 0) = Complex(0.0, 1.0);
        break;
    case BellOutcome::PsiMinus: // sigma_x
        u(0, 1) = 1.0;
        u(1, 0) = 1.0;
        break;
    }
    return u;
}

MeasureResult measure(const DensityMatrix& rho1, const DensityMatrix& rho23, BellOutcome outcome,
                      Validation validation) {
    if (rho1.dim() != 2) {
        throw WrongShape("input state must be a single qubit");
    }
    if (rho23.dim() != 4 || !rho23.is_bipartite()) {
        throw WrongShape("channel state must be a two-qubit density matrix");
    }
    const ComplexMatrix composite = tensor_product(rho1.mat(), rho23.mat());
    const ComplexMatrix projector = tensor_product(bell_projector(outcome), ComplexMatrix::identity(2));
    const ComplexMatrix projected = projector * composite * projector;

    MeasureResult result;
    result.probability = trace(projected).real();
    if (result.probability < kDegenerateProbability) {
        result.probability = std::max(result.probability, 0.0);
        result.degenerate = true;
        return result;
    }
    // Qubits (1,2) form the 4-dim subsystem A; Bob's qubit is subsystem B.
    ComplexMatrix bob = partial_trace_mat(projected, Dims{4, 2}, Keep::B);
    bob = (1.0 / result.probability) * bob;
    result.bob_raw.emplace(std::move(bob), Dims{2, 1}, validation);
    return result;
}

TeleportRun run(const QubitState& input, const channels::Channel& channel) {
    const DensityMatrix rho1 = from_qubit(input);
    const Validation validation =
        channel.physical ? Validation::Strict : Validation::AllowNonPsd;
    TeleportRun out{input, channel.spec, {}};
    for (std::size_t k = 0; k < kAllOutcomes.size(); ++k) {
        const BellOutcome outcome = kAllOutcomes[k];
        MeasureResult m = measure(rho1, channel.state, outcome, validation);
        TeleportOutcome& slot = out.outcomes[k];
        slot.outcome = outcome;
        slot.probability = m.probability;
        slot.degenerate = m.degenerate;
        if (!m.degenerate) {
            const ComplexMatrix u = correction(outcome);
            ComplexMatrix corrected = u * m.bob_raw->mat() * adjoint(u);
            slot.bob_corrected.emplace(std::move(corrected), Dims{2, 1}, validation);
            slot.bob_raw = std::move(m.bob_raw);
        }
    }
    return out;
}

} // namespace teleport
} // namespace mixport
