#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qpad {

using Complex = std::complex<double>;

/// Small dense square complex matrix, row-major. Sized for gate matrices
/// (2x2, 4x4) and for brute-force circuit unitaries at test scale.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix& rhs) const = default;

    /// Entrywise: |this - I| <= tol.
    bool is_identity(double tol) const;

    /// adjoint() * this == I within tol entrywise.
    bool is_unitary(double tol) const;

    /// this == lambda * I for some unit-modulus lambda, within tol entrywise.
    bool is_identity_up_to_phase(double tol) const;

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

}  // namespace qpad
