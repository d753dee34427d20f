#pragma once

#include <span>
#include <vector>

#include "interp/kernels.hpp"
#include "interp/linalg.hpp"
#include "interp/sdp.hpp"

namespace interp {

using PolyPointSet = std::vector<PolyPoint>;

/// Lift disk points to one-dimensional polydisc points.
PolyPointSet as_poly(std::span<const Complex> points);

/// Interpolation data f(lambda_i) = w_i with the norm bound C.
struct PickProblem {
  PolyPointSet points;
  std::vector<Complex> values;
  double bound = 1.0;

  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
  /// Throws ArgumentError on size mismatch, mixed dimensions, duplicate
  /// points or a nonpositive bound; DomainError for points outside the polydisc.
  void validate() const;
};

struct PickTestResult {
  bool feasible = false;
  /// lambda_min of the Pick matrix.
  double margin = 0.0;
};

/// Positivity of [(C^2 - w_i conj(w_j)) k(z_i, z_j)] for a one-variable
/// problem. Feasible iff margin >= -1e-10 n.
PickTestResult pick_psd_test(const PickProblem& problem, const KernelSpec& spec);

/// R_l = [1/k_l(lambda_i^l, lambda_j^l)], one matrix per coordinate.
std::vector<HermitianMatrix> agler_r_matrices(const PolyPointSet& points, const ProductKernelSpec& specs);

struct AglerDecomposition {
  std::vector<HermitianMatrix> blocks;
  double affine_residual = 0.0;
  double psd_margin = 0.0;
};

/// Outcome of an Agler feasibility solve. When `feasible` is false the
/// decomposition holds the best iterate found; this is not a certificate of
/// infeasibility, only "no decomposition within tolerance and budget".
struct AglerResult {
  bool feasible = false;
  AglerDecomposition decomposition;
  int iterations = 0;
  bool stalled = false;
};

/// Find PSD Gamma^1..Gamma^d with sum_l Gamma^l o R_l = target.
AglerResult agler_feasible(const PolyPointSet& points, const ProductKernelSpec& specs,
                           const HermitianMatrix& target, const DykstraOptions& options = {});

struct BisectionOptions {
  DykstraOptions solver{};
  int max_iterations = 60;
  /// Stop once the bracket is narrower than this.
  double tolerance = 1e-7;
  double upper_bound = 1e6;
};

/// Smallest M >= 1 with MI - J = sum_l Gamma^l o R_l, Gamma^l >= 0.
/// Throws BudgetError if M exceeds options.upper_bound.
double condition_a_constant(const PolyPointSet& points, const ProductKernelSpec& specs,
                            const BisectionOptions& options = {});

/// Largest N in [0,1] with J - NI = sum_l Delta^l o R_l, Delta^l >= 0.
double condition_b_constant(const PolyPointSet& points, const ProductKernelSpec& specs,
                            const BisectionOptions& options = {});

/// Smallest C such that C^2 J - w w^* admits an Agler decomposition, i.e. the
/// minimal Schur-Agler norm of an interpolant of the data.
double pick_constant_for_values(const PolyPointSet& points, const ProductKernelSpec& specs,
                                std::span<const Complex> values, const BisectionOptions& options = {});

/// Whether J - NI admits an Agler decomposition; equivalently, whether the
/// points carry a column interpolant Phi(lambda_i) = e_i of norm at most sqrt(N).
bool vector_valued_feasible(const PolyPointSet& points, const ProductKernelSpec& specs, double n_bound,
                            const DykstraOptions& options = {});

} // namespace interp
