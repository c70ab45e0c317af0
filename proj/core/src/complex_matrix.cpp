#include "qpad/complex_matrix.hpp"

#include <cmath>

namespace qpad {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = at(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(r, c) = std::conj(at(c, r));
        }
    }
    return out;
}

bool ComplexMatrix::is_identity(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex want = (r == c) ? Complex{1.0, 0.0} : Complex{};
            if (std::abs(at(r, c) - want) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (adjoint() * *this).is_identity(tol);
}

bool ComplexMatrix::is_identity_up_to_phase(double tol) const {
    const Complex lambda = at(0, 0);
    if (std::abs(std::abs(lambda) - 1.0) > tol) {
        return false;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex want = (r == c) ? lambda : Complex{};
            if (std::abs(at(r, c) - want) > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qpad
