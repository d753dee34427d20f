#include "interp/sdp.hpp"

#include <algorithm>
#include <limits>

#include "interp/errors.hpp"

namespace interp {

AffineConstraint::AffineConstraint(std::vector<HermitianMatrix> r_matrices, HermitianMatrix target)
    : r_(std::move(r_matrices)), target_(std::move(target)) {
  if (r_.empty()) throw ArgumentError("affine constraint needs at least one R matrix");
  const Eigen::Index n = target_.size();
  if (n == 0) throw ArgumentError("affine constraint target is empty");
  denom_ = Eigen::MatrixXd::Zero(n, n);
  for (const auto& r : r_) {
    if (r.size() != n) throw ArgumentError("R matrix size does not match target");
    denom_ += r.matrix().cwiseAbs2();
  }
  if (!(denom_.minCoeff() > 0.0)) {
    throw ArgumentError("affine constraint has an entry where every R matrix vanishes");
  }
}

HermitianMatrix AffineConstraint::apply(const std::vector<HermitianMatrix>& blocks) const {
  if (blocks.size() != r_.size()) throw ArgumentError("block count does not match constraint");
  CMatrix acc = CMatrix::Zero(size(), size());
  for (std::size_t l = 0; l < r_.size(); ++l) {
    if (blocks[l].size() != size()) throw ArgumentError("block size does not match constraint");
    acc += blocks[l].matrix().cwiseProduct(r_[l].matrix());
  }
  return HermitianMatrix(acc);
}

std::vector<HermitianMatrix> AffineConstraint::adjoint(const HermitianMatrix& s) const {
  if (s.size() != size()) throw ArgumentError("adjoint argument has the wrong size");
  std::vector<HermitianMatrix> out;
  out.reserve(r_.size());
  for (const auto& r : r_) out.emplace_back(r.matrix().conjugate().cwiseProduct(s.matrix()));
  return out;
}

double AffineConstraint::residual(const std::vector<HermitianMatrix>& blocks) const {
  return (target_ - apply(blocks)).frobenius_norm();
}

HermitianMatrix project_psd(const HermitianMatrix& a) {
  if (a.size() == 0) return a;
  const EigenDecomposition eig = hermitian_eigen(a.matrix());
  const RVector clipped = eig.values.cwiseMax(0.0);
  return HermitianMatrix(eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint());
}

std::vector<HermitianMatrix> project_affine(const std::vector<HermitianMatrix>& blocks,
                                            const AffineConstraint& constraint) {
  const HermitianMatrix gap = constraint.target() - constraint.apply(blocks);
  const CMatrix s = gap.matrix().cwiseQuotient(constraint.gram_symbol().cast<Complex>());
  std::vector<HermitianMatrix> out;
  out.reserve(blocks.size());
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const CMatrix& r = constraint.r_matrices()[l].matrix();
    out.emplace_back(blocks[l].matrix() + r.conjugate().cwiseProduct(s));
  }
  return out;
}

CertificateCheck check_certificate(const AffineConstraint& constraint,
                                   const std::vector<HermitianMatrix>& blocks, double tolerance) {
  CertificateCheck check;
  check.affine_residual = constraint.residual(blocks);
  check.psd_margin = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks) check.psd_margin = std::min(check.psd_margin, b.min_eigenvalue());
  check.valid = check.affine_residual <= tolerance && check.psd_margin >= -tolerance;
  return check;
}

namespace {

// Raw-matrix kernels for the inner loop; HermitianMatrix re-symmetrizes on
// every construction, which is wasted work here.
void psd_clip(const CMatrix& a, CMatrix& out, CMatrix& scaled, Eigen::SelfAdjointEigenSolver<CMatrix>& solver) {
  solver.compute(a);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  const RVector& ev = solver.eigenvalues();
  if (ev(0) >= 0.0) {
    out = a;
    return;
  }
  const CMatrix& v = solver.eigenvectors();
  scaled = v;
  for (Eigen::Index k = 0; k < ev.size(); ++k) scaled.col(k) *= std::max(ev(k), 0.0);
  out.noalias() = scaled * v.adjoint();
}

} // namespace

SdpResult dykstra_solve(const AffineConstraint& constraint, const DykstraOptions& options) {
  const Eigen::Index n = constraint.size();
  const std::size_t d = constraint.blocks();
  const CMatrix& target = constraint.target().matrix();
  const CMatrix denom = constraint.gram_symbol().cast<Complex>();
  std::vector<CMatrix> r(d), r_conj(d);
  for (std::size_t l = 0; l < d; ++l) {
    r[l] = constraint.r_matrices()[l].matrix();
    r_conj[l] = r[l].conjugate();
  }

  const CMatrix zero = CMatrix::Zero(n, n);
  std::vector<CMatrix> x(d, zero), p(d, zero), q(d, zero), y(d, zero), best(d, zero);
  CMatrix tmp(n, n), gap(n, n), s(n, n), scaled(n, n);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(n);

  SdpResult result;
  double best_residual = std::numeric_limits<double>::infinity();
  double window_start_best = best_residual;
  int window_start = 0;

  auto residual_of = [&](const std::vector<CMatrix>& blocks) {
    gap = target;
    for (std::size_t l = 0; l < d; ++l) gap -= blocks[l].cwiseProduct(r[l]);
    return gap.norm();
  };

  int it = 0;
  while (it < options.max_iterations) {
    ++it;
    // PSD step with correction p.
    for (std::size_t l = 0; l < d; ++l) {
      tmp = x[l] + p[l];
      psd_clip(tmp, y[l], scaled, solver);
      p[l] = tmp - y[l];
    }
    // Affine step with correction q.
    gap = target;
    for (std::size_t l = 0; l < d; ++l) gap -= (y[l] + q[l]).cwiseProduct(r[l]);
    s = gap.cwiseQuotient(denom);
    for (std::size_t l = 0; l < d; ++l) {
      tmp = r_conj[l].cwiseProduct(s);
      x[l] = y[l] + q[l] + tmp;
      q[l] = -tmp;
    }

    const double res = residual_of(y);
    if (options.record_history) result.residual_history.push_back(res);
    if (res < best_residual) {
      best_residual = res;
      best = y;
    }
    if (res <= options.tolerance) break;
    if (it - window_start >= options.stall_window) {
      if (window_start_best - best_residual < options.stall_improvement) {
        result.stalled = true;
        break;
      }
      window_start = it;
      window_start_best = best_residual;
    }
  }

  result.iterations = it;
  result.blocks.reserve(d);
  for (const auto& b : best) result.blocks.emplace_back(b);
  const CertificateCheck check = check_certificate(constraint, result.blocks, options.tolerance);
  result.affine_residual = check.affine_residual;
  result.psd_margin = check.psd_margin;
  result.success = check.valid;
  return result;
}

} // namespace interp
