#include "mixport/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mixport {
namespace entanglement {

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* what) {
    if (rho.dim() != 4 || rho.dims().a != 2 || rho.dims().b != 2) {
        throw WrongShape(std::string(what) + " requires a 2x2-partitioned two-qubit state");
    }
}

ComplexMatrix sigma_y_pair() {
    ComplexMatrix sy(2);
    sy(0, 1) = Complex(0.0, -1.0);
    sy(1, 0) = Complex(0.0, 1.0);
    return tensor_product(sy, sy);
}

} // namespace

double concurrence(const DensityMatrix& rho) {
    require_two_qubit(rho, "concurrence");
    const ComplexMatrix& m = rho.mat();
    const ComplexMatrix syy = sigma_y_pair();
    const ComplexMatrix spin_flipped = syy * conjugate(m) * syy;

    // Eigenvalues of m * spin_flipped equal those of D^{1/2} Q D^{1/2} with
    // m = V D V^dagger and Q = V^dagger spin_flipped V.
    const EigenSystem es = hermitian_eigensystem(m);
    const ComplexMatrix q = adjoint(es.vectors) * spin_flipped * es.vectors;
    ComplexMatrix w(4);
    std::array<double, 4> root{};
    for (int i = 0; i < 4; ++i) {
        root[static_cast<std::size_t>(i)] = std::sqrt(std::max(es.values[static_cast<std::size_t>(i)], 0.0));
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            w(i, j) = root[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)] * q(i, j);
        }
    }
    std::vector<double> lam_sq = hermitian_eigenvalues(w);
    double c = 0.0;
    for (std::size_t k = 0; k < lam_sq.size(); ++k) {
        const double lam = std::sqrt(std::max(lam_sq[k], 0.0));
        c += (k == 0) ? lam : -lam;
    }
    return std::clamp(c, 0.0, 1.0);
}

double min_pt_eigenvalue(const DensityMatrix& rho) {
    require_two_qubit(rho, "min_pt_eigenvalue");
    return hermitian_eigenvalues(partial_transpose(rho)).back();
}

double linear_entropy_mat(const ComplexMatrix& m) {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
    double purity = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            purity += std::norm(m(i, j));
        }
    }
    return (4.0 / 3.0) * (1.0 - purity);
}

double linear_entropy(const DensityMatrix& rho) {
    return linear_entropy_mat(rho.mat());
}

const char* measure_name(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Concurrence:
        return "concurrence";
    case MeasureKind::MinPtEigenvalue:
        return "min_pt_eigenvalue";
    case MeasureKind::LinearEntropy:
        return "linear_entropy";
    }
    return "?";
}

std::array<MeasureValue, 3> measure_all(const DensityMatrix& rho) {
    return {MeasureValue{MeasureKind::Concurrence, concurrence(rho)},
            MeasureValue{MeasureKind::MinPtEigenvalue, min_pt_eigenvalue(rho)},
            MeasureValue{MeasureKind::LinearEntropy, linear_entropy(rho)}};
}

} // namespace entanglement
} // namespace mixport
