#pragma once

#include <complex>

#include <Eigen/Dense>

namespace interp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Dense complex Hermitian matrix. The stored entries are always exactly
/// Hermitian: the input is replaced by (A + A^*)/2 on construction.
class HermitianMatrix {
public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& a);

  static HermitianMatrix zero(Eigen::Index n);
  static HermitianMatrix identity(Eigen::Index n);
  /// J, the all-ones matrix.
  static HermitianMatrix ones(Eigen::Index n);

  Eigen::Index size() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Ascending eigenvalues. Throws NumericError if the solver fails.
  RVector eigenvalues() const;
  double min_eigenvalue() const;
  double max_eigenvalue() const;

  double frobenius_norm() const { return m_.norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
  CMatrix m_;
};

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // columns
};

/// Eigen-decomposition of the symmetrized input. Throws NumericError on failure.
EigenDecomposition hermitian_eigen(const CMatrix& a);

/// Entrywise (Schur / Hadamard) product.
HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b);

} // namespace interp
