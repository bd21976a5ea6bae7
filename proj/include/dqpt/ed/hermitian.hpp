#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dqpt::ed {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, used for many-body operators.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0, 0.0}) {}

  std::size_t dim() const { return n_; }
  Complex& at(std::size_t row, std::size_t col) { return a_[row * n_ + col]; }
  const Complex& at(std::size_t row, std::size_t col) const { return a_[row * n_ + col]; }
  const std::vector<Complex>& data() const { return a_; }

  /// max_ij |A_ij - conj(A_ji)|.
  double hermiticity_defect() const;
  double max_abs() const;

  /// y = A x.
  std::vector<Complex> apply(const std::vector<Complex>& x) const;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

/// Eigendecomposition A = V diag(values) V^dagger, eigenvalues ascending.
/// Eigenvector j occupies vectors[i + n*j] (column-major).
struct EigenSystem {
  std::vector<double> values;
  std::vector<Complex> vectors;
  std::size_t dim = 0;

  const Complex* vector(std::size_t j) const { return vectors.data() + dim * j; }
};

/// Full dense Hermitian eigensolver: complex Householder reduction to real
/// symmetric tridiagonal form, then implicit-shift QL with accumulated
/// transformations. Throws std::invalid_argument if the input fails the
/// 1e-12 hermiticity contract.
EigenSystem eigh(const HermitianMatrix& matrix);

}  // namespace dqpt::ed
