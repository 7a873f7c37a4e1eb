#ifndef MIXPORT_COMPLEX_MATRIX_HPP
#define MIXPORT_COMPLEX_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "mixport/errors.hpp"

namespace mixport {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. All dimensions used in this
// project are tiny (1..8), so storage is a flat std::vector and every
// algorithm favors robustness over speed.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    bool is_finite() const;
    // max_ij |m[i][j] - conj(m[j][i])|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    double frobenius_norm() const;
    double max_abs_diff(const ComplexMatrix& other) const;

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

  private:
    int dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

// Kronecker product: entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j)*b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& m);
// LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);

// Hermiticity tolerance for all validation in the project. The matrices of
// interest are exact; the tolerance only absorbs round-trip arithmetic.
inline constexpr double kHermTol = 1e-10;

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

// Eigenvalues of a Hermitian matrix, sorted descending. Dim 2 uses the
// closed-form quadratic; larger dims use cyclic Jacobi iterated until
// max |off-diagonal| < 1e-12 * ||m||_F. Throws NotHermitian if the input
// fails the kHermTol check.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

} // namespace mixport

#endif
