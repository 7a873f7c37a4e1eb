#ifndef MIXPORT_ENTANGLEMENT_HPP
#define MIXPORT_ENTANGLEMENT_HPP

#include <array>

#include "mixport/density.hpp"

namespace mixport {
namespace entanglement {

enum class MeasureKind { Concurrence, MinPtEigenvalue, LinearEntropy };

struct MeasureValue {
    MeasureKind measure;
    double value;
};

const char* measure_name(MeasureKind kind);

// Concurrence, minimum partial-transpose eigenvalue and linear entropy of a
// two-qubit state, in that order.
std::array<MeasureValue, 3> measure_all(const DensityMatrix& rho);

// Wootters concurrence C = max(0, l1-l2-l3-l4), the li being the descending
// square roots of the eigenvalues of rho * (sy x sy) * conj(rho) * (sy x sy).
// The product is Hermitized through the spectral factorization of rho, so
// only the Hermitian eigensolver is needed.
double concurrence(const DensityMatrix& rho);

// Minimum eigenvalue of the partial transpose; negative iff entangled for
// two qubits.
double min_pt_eigenvalue(const DensityMatrix& rho);

// S_L = (4/3) (1 - Tr rho^2). The 4/3 prefactor is kept for every dimension,
// which normalizes a maximally mixed qubit to 1 (and a maximally mixed
// two-qubit state too).
double linear_entropy(const DensityMatrix& rho);
double linear_entropy_mat(const ComplexMatrix& m);

} // namespace entanglement
} // namespace mixport

#endif
