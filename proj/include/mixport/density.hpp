#ifndef MIXPORT_DENSITY_HPP
#define MIXPORT_DENSITY_HPP

#include <utility>

#include "mixport/complex_matrix.hpp"

namespace mixport {

// Eigenvalue slack accepted below zero. Catalog matrices sit exactly on rank
// boundaries (weights equal to 0), so validation has to accept -1e-16 noise.
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

enum class Validation {
    Strict,      // Hermitian + unit trace + positive semi-definite
    AllowNonPsd, // Hermitian + unit trace only (formal continuations of catalog families)
};

struct Dims {
    int a = 1;
    int b = 1;
};

// Single-qubit state in the (x, y) parameterization of the 2x2 density
// matrix [[x, y], [conj(y), 1-x]].
struct QubitState {
    double x;
    Complex y;

    QubitState(double x_, Complex y_);
};

class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix mat, Dims dims, Validation validation = Validation::Strict);

    const ComplexMatrix& mat() const { return mat_; }
    Dims dims() const { return dims_; }
    int dim() const { return mat_.dim(); }
    bool is_bipartite() const { return dims_.a > 1 && dims_.b > 1; }

  private:
    ComplexMatrix mat_;
    Dims dims_;
};

DensityMatrix from_qubit(const QubitState& q);

enum class Keep { A, B };

// Reduced state of one subsystem. keep=A gives the matrix of block traces,
// keep=B the sum of diagonal blocks.
DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep);

// Transposition of subsystem B: each block replaced by its transpose. The
// result is Hermitian and trace preserving but in general not PSD, so it is
// returned as a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho);

// Same operations on raw matrices with explicit block structure; used by the
// teleportation pipeline on unnormalized projected operators.
ComplexMatrix partial_trace_mat(const ComplexMatrix& m, Dims dims, Keep keep);
ComplexMatrix partial_transpose_mat(const ComplexMatrix& m, Dims dims);

} // namespace mixport

#endif
