#include "mixport/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mixport {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": operand dims " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) {
        throw DimensionMismatch("matrix dim must be positive, got " + std::to_string(dim));
    }
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries) : ComplexMatrix(dim) {
    if (entries.size() != entries_.size()) {
        throw DimensionMismatch("entry count " + std::to_string(entries.size()) +
                                " does not fill a " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " matrix");
    }
    std::copy(entries.begin(), entries.end(), entries_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "sub");
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out(i, j) = a(i, j) - b(i, j);
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            out(i, j) = s * m(i, j);
        }
    }
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) {
    return Complex(s, 0.0) * m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex t = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

Complex determinant(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix lu = m;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu(col, col));
        for (int row = col + 1; row < n; ++row) {
            const double cand = std::abs(lu(row, col));
            if (cand > best) {
                best = cand;
                pivot = row;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(lu(pivot, j), lu(col, j));
            }
            sign = -sign;
        }
        for (int row = col + 1; row < n; ++row) {
            const Complex factor = lu(row, col) / lu(col, col);
            lu(row, col) = factor;
            for (int j = col + 1; j < n; ++j) {
                lu(row, j) -= factor * lu(col, j);
            }
        }
    }
    Complex det = static_cast<double>(sign);
    for (int i = 0; i < n; ++i) {
        det *= lu(i, i);
    }
    return det;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            out(i, j) = m(j, i);
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            out(i, j) = std::conj(m(i, j));
        }
    }
    return out;
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
    const double defect = m.hermiticity_defect();
    if (defect > kHermTol) {
        throw NotHermitian("hermiticity defect " + std::to_string(defect) + " exceeds tolerance");
    }
    if (!m.is_finite()) {
        throw InvalidState("matrix contains non-finite entries");
    }
}

double max_offdiag_abs(const ComplexMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = i + 1; j < m.dim(); ++j) {
            worst = std::max(worst, std::abs(m(i, j)));
        }
    }
    return worst;
}

// One-sided complex Jacobi rotation for the Hermitian pivot (p,q).
// Chooses a unitary U acting on coordinates p,q that zeroes A(p,q), then
// applies A <- U^dagger A U in place and accumulates V <- V U.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const Complex phase = apq / mag; // e^{i arg(a_pq)}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    // tan(2 theta) = 2|a_pq| / (a_pp - a_qq), stable small-angle root.
    double t;
    if (app == aqq) {
        t = 1.0;
    } else {
        const double tau = (app - aqq) / (2.0 * mag);
        t = ((tau >= 0.0) ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    // Column update: A <- A U with U(p,p)=c, U(p,q)=-s*phase,
    // U(q,p)=s*conj(phase), U(q,q)=c.
    for (int k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    // Row update: A <- U^dagger A.
    for (int k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    // Keep the pivot pair exactly clean.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
}

EigenSystem jacobi_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = 1e-12 * std::max(m.frobenius_norm(), 1e-300);

    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    while (max_offdiag_abs(a) > target) {
        if (++sweep > kMaxSweeps) {
            throw Error("Jacobi eigensolver failed to converge");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > 0.0) {
                    jacobi_rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    std::sort(order.begin(), order.end(),
              [&a](int lhs, int rhs) { return a(lhs, lhs).real() > a(rhs, rhs).real(); });

    EigenSystem out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = a(src, src).real();
        for (int row = 0; row < n; ++row) {
            out.vectors(row, k) = v(row, src);
        }
    }
    return out;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m);
    if (m.dim() == 1) {
        return {m(0, 0).real()};
    }
    if (m.dim() == 2) {
        const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
        const double half_gap = 0.5 * (m(0, 0).real() - m(1, 1).real());
        const double radius = std::hypot(half_gap, std::abs(m(0, 1)));
        return {mean + radius, mean - radius};
    }
    return jacobi_eigensystem(m).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    require_hermitian(m);
    return jacobi_eigensystem(m);
}

} // namespace mixport
