#pragma once

#include <vector>

#include "interp/linalg.hpp"

namespace interp {

/// The affine constraint  A(Gamma) = sum_l Gamma^l o R_l = target,  where o is
/// the Schur product. Every entry of every R_l must be nonzero, which is the
/// case for R_l = [1/k_l(z_i, z_j)] with points in the open disk.
class AffineConstraint {
public:
  AffineConstraint(std::vector<HermitianMatrix> r_matrices, HermitianMatrix target);

  Eigen::Index size() const noexcept { return target_.size(); }
  std::size_t blocks() const noexcept { return r_.size(); }
  const std::vector<HermitianMatrix>& r_matrices() const noexcept { return r_; }
  const HermitianMatrix& target() const noexcept { return target_; }

  /// sum_l blocks[l] o R_l.
  HermitianMatrix apply(const std::vector<HermitianMatrix>& blocks) const;
  /// Adjoint map: S -> (conj(R_l) o S)_l.
  std::vector<HermitianMatrix> adjoint(const HermitianMatrix& s) const;
  /// Frobenius norm of target - apply(blocks).
  double residual(const std::vector<HermitianMatrix>& blocks) const;

  /// Entrywise sum_m |R_m|^2, the symbol of A A^*.
  const Eigen::MatrixXd& gram_symbol() const noexcept { return denom_; }

private:
  std::vector<HermitianMatrix> r_;
  HermitianMatrix target_;
  Eigen::MatrixXd denom_;
};

/// Frobenius-nearest positive semidefinite matrix (negative eigenvalues clipped).
HermitianMatrix project_psd(const HermitianMatrix& a);

/// Orthogonal projection of the block tuple onto the affine set of `constraint`:
/// Gamma^l <- Gamma^l + conj(R_l) o S,  S = (target - A(Gamma)) / sum_m |R_m|^2.
std::vector<HermitianMatrix> project_affine(const std::vector<HermitianMatrix>& blocks,
                                            const AffineConstraint& constraint);

struct DykstraOptions {
  double tolerance = 1e-7;
  int max_iterations = 50000;
  /// Exit early if the best residual improved by less than stall_improvement
  /// over the last stall_window iterations.
  int stall_window = 500;
  double stall_improvement = 1e-14;
  bool record_history = false;
};

struct SdpResult {
  bool success = false;
  std::vector<HermitianMatrix> blocks;
  double affine_residual = 0.0;
  double psd_margin = 0.0;
  int iterations = 0;
  bool stalled = false;
  /// Residual of the PSD iterate after each iteration (only if requested).
  std::vector<double> residual_history;
};

struct CertificateCheck {
  double affine_residual = 0.0;
  double psd_margin = 0.0;
  bool valid = false;
};

/// Recomputes residual and PSD margin of `blocks` from scratch. Independent of
/// the solver: only the constraint data and an eigensolver are used.
CertificateCheck check_certificate(const AffineConstraint& constraint,
                                   const std::vector<HermitianMatrix>& blocks, double tolerance);

/// Dykstra's alternating projections between the product of PSD cones and the
/// affine set, started from zero blocks. A success verdict is issued only
/// after check_certificate accepts the returned blocks.
SdpResult dykstra_solve(const AffineConstraint& constraint, const DykstraOptions& options = {});

} // namespace interp
