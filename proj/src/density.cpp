#include "mixport/density.hpp"

#include <cmath>
#include <string>

namespace mixport {

QubitState::QubitState(double x_, Complex y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y.real()) || !std::isfinite(y.imag())) {
        throw InvalidState("qubit parameters must be finite");
    }
    if (x < 0.0 || x > 1.0) {
        throw InvalidState("qubit parameter x must lie in [0,1], got " + std::to_string(x));
    }
    if (x * (1.0 - x) - std::norm(y) < -kPsdTol) {
        throw InvalidState("qubit parameters violate x(1-x) >= |y|^2");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims, Validation validation)
    : mat_(std::move(mat)), dims_(dims) {
    if (dims_.a <= 0 || dims_.b <= 0 || dims_.a * dims_.b != mat_.dim()) {
        throw DimensionMismatch("subsystem dims " + std::to_string(dims_.a) + "x" +
                                std::to_string(dims_.b) + " do not factor matrix dim " +
                                std::to_string(mat_.dim()));
    }
    if (!mat_.is_finite()) {
        throw InvalidState("density matrix contains non-finite entries");
    }
    const double defect = mat_.hermiticity_defect();
    if (defect > kHermTol) {
        throw NotHermitian("density matrix hermiticity defect " + std::to_string(defect));
    }
    const Complex t = trace(mat_);
    if (std::abs(t - Complex(1.0, 0.0)) > kTraceTol) {
        throw InvalidState("density matrix trace " + std::to_string(t.real()) + "+" +
                           std::to_string(t.imag()) + "i is not 1");
    }
    if (validation == Validation::Strict) {
        const std::vector<double> eig = hermitian_eigenvalues(mat_);
        if (eig.back() < -kPsdTol) {
            throw InvalidState("density matrix has negative eigenvalue " +
                               std::to_string(eig.back()));
        }
    }
}

DensityMatrix from_qubit(const QubitState& q) {
    ComplexMatrix m(2);
    m(0, 0) = q.x;
    m(0, 1) = q.y;
    m(1, 0) = std::conj(q.y);
    m(1, 1) = 1.0 - q.x;
    return DensityMatrix(std::move(m), Dims{2, 1});
}

ComplexMatrix partial_trace_mat(const ComplexMatrix& m, Dims dims, Keep keep) {
    if (dims.a * dims.b != m.dim() || dims.a < 2 || dims.b < 2) {
        throw NotBipartite("partial trace requires bipartite structure with both dims > 1");
    }
    if (keep == Keep::A) {
        ComplexMatrix out(dims.a);
        for (int i = 0; i < dims.a; ++i) {
            for (int j = 0; j < dims.a; ++j) {
                Complex sum = 0.0;
                for (int k = 0; k < dims.b; ++k) {
                    sum += m(i * dims.b + k, j * dims.b + k);
                }
                out(i, j) = sum;
            }
        }
        return out;
    }
    ComplexMatrix out(dims.b);
    for (int k = 0; k < dims.b; ++k) {
        for (int l = 0; l < dims.b; ++l) {
            Complex sum = 0.0;
            for (int i = 0; i < dims.a; ++i) {
                sum += m(i * dims.b + k, i * dims.b + l);
            }
            out(k, l) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_transpose_mat(const ComplexMatrix& m, Dims dims) {
    if (dims.a * dims.b != m.dim() || dims.a < 2 || dims.b < 2) {
        throw NotBipartite("partial transpose requires bipartite structure with both dims > 1");
    }
    ComplexMatrix out(m.dim());
    for (int i = 0; i < dims.a; ++i) {
        for (int j = 0; j < dims.a; ++j) {
            for (int k = 0; k < dims.b; ++k) {
                for (int l = 0; l < dims.b; ++l) {
                    out(i * dims.b + k, j * dims.b + l) = m(i * dims.b + l, j * dims.b + k);
                }
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep) {
    ComplexMatrix reduced = partial_trace_mat(rho.mat(), rho.dims(), keep);
    const int d = reduced.dim();
    return DensityMatrix(std::move(reduced), Dims{d, 1});
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
    return partial_transpose_mat(rho.mat(), rho.dims());
}

} // namespace mixport
