#include "interp/linalg.hpp"

#include "interp/errors.hpp"

namespace interp {

namespace {

CMatrix symmetrize(const CMatrix& a) {
  if (a.rows() != a.cols()) throw ArgumentError("matrix is not square");
  return (a + a.adjoint()) * 0.5;
}

} // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& a) : m_(symmetrize(a)) {}

HermitianMatrix HermitianMatrix::zero(Eigen::Index n) { return HermitianMatrix(CMatrix::Zero(n, n)); }

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  return HermitianMatrix(CMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::ones(Eigen::Index n) { return HermitianMatrix(CMatrix::Ones(n, n)); }

RVector HermitianMatrix::eigenvalues() const {
  if (m_.size() == 0) return RVector();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

double HermitianMatrix::min_eigenvalue() const {
  if (m_.size() == 0) throw ArgumentError("empty matrix has no eigenvalues");
  return eigenvalues()(0);
}

double HermitianMatrix::max_eigenvalue() const {
  if (m_.size() == 0) throw ArgumentError("empty matrix has no eigenvalues");
  const RVector ev = eigenvalues();
  return ev(ev.size() - 1);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) { return HermitianMatrix(s * a.m_); }

EigenDecomposition hermitian_eigen(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrize(a));
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.size() != b.size()) throw ArgumentError("Schur product of matrices with different sizes");
  return HermitianMatrix(a.matrix().cwiseProduct(b.matrix()));
}

} // namespace interp
