#include "interp/pick.hpp"

#include <algorithm>
#include <functional>

#include "interp/errors.hpp"

namespace interp {

PolyPointSet as_poly(std::span<const Complex> points) {
  PolyPointSet out;
  out.reserve(points.size());
  for (Complex z : points) out.push_back(PolyPoint{z});
  return out;
}

void PickProblem::validate() const {
  if (points.empty()) throw ArgumentError("interpolation problem has no points");
  if (points.size() != values.size()) throw ArgumentError("number of values does not match number of points");
  if (!(bound > 0.0) || !std::isfinite(bound)) throw ArgumentError("bound must be positive");
  const std::size_t d = dim();
  for (const auto& p : points) {
    if (p.size() != d) throw ArgumentError("points have mixed dimensions");
    require_in_polydisc(p);
  }
  for (Complex w : values) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw ArgumentError("value is not finite");
  }
  require_distinct(std::span<const PolyPoint>(points));
}

PickTestResult pick_psd_test(const PickProblem& problem, const KernelSpec& spec) {
  problem.validate();
  if (problem.dim() != 1) throw ArgumentError("pick_psd_test needs one-variable points");
  const auto n = static_cast<Eigen::Index>(problem.points.size());
  const double c2 = problem.bound * problem.bound;
  CMatrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex wij = problem.values[i] * std::conj(problem.values[j]);
      p(i, j) = (c2 - wij) * spec.eval(problem.points[i][0], problem.points[j][0]);
    }
  }
  PickTestResult result;
  result.margin = HermitianMatrix(p).min_eigenvalue();
  result.feasible = result.margin >= -1e-10 * static_cast<double>(n);
  return result;
}

std::vector<HermitianMatrix> agler_r_matrices(const PolyPointSet& points, const ProductKernelSpec& specs) {
  const std::size_t d = specs.dim();
  const auto n = static_cast<Eigen::Index>(points.size());
  for (const auto& p : points) {
    if (p.size() != d) throw ArgumentError("point dimension does not match number of kernel factors");
    require_in_polydisc(p);
  }
  std::vector<HermitianMatrix> out;
  out.reserve(d);
  for (std::size_t l = 0; l < d; ++l) {
    CMatrix r(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) r(i, j) = specs.factor(l).inverse(points[i][l], points[j][l]);
    }
    out.emplace_back(r);
  }
  return out;
}

AglerResult agler_feasible(const PolyPointSet& points, const ProductKernelSpec& specs,
                           const HermitianMatrix& target, const DykstraOptions& options) {
  if (points.empty()) throw ArgumentError("Agler feasibility needs at least one point");
  if (target.size() != static_cast<Eigen::Index>(points.size())) {
    throw ArgumentError("target size does not match number of points");
  }
  AffineConstraint constraint(agler_r_matrices(points, specs), target);
  SdpResult sdp = dykstra_solve(constraint, options);
  AglerResult result;
  result.feasible = sdp.success;
  result.decomposition = {std::move(sdp.blocks), sdp.affine_residual, sdp.psd_margin};
  result.iterations = sdp.iterations;
  result.stalled = sdp.stalled;
  return result;
}

namespace {

using Feasibility = std::function<bool(double)>;

// Smallest t in [lo, upper] with feasible(t), for feasibility monotone
// nondecreasing in t. The returned value is always a feasible one.
double bisect_lower_edge(const Feasibility& feasible, double lo, const BisectionOptions& options) {
  if (feasible(lo)) return lo;
  if (lo >= options.upper_bound) {
    throw BudgetError("lower end of the bisection bracket exceeds the upper bound");
  }
  double hi = std::min(std::max(2.0 * lo, lo + 1.0), options.upper_bound);
  while (!feasible(hi)) {
    if (hi >= options.upper_bound) {
      throw BudgetError("no feasible constant below the bisection upper bound " +
                        std::to_string(options.upper_bound));
    }
    lo = hi;
    hi = std::min(2.0 * hi, options.upper_bound);
  }
  for (int it = 0; it < options.max_iterations && hi - lo > options.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

void require_points(const PolyPointSet& points) {
  if (points.empty()) throw ArgumentError("need at least one point");
  require_distinct(std::span<const PolyPoint>(points));
}

} // namespace

double condition_a_constant(const PolyPointSet& points, const ProductKernelSpec& specs,
                            const BisectionOptions& options) {
  require_points(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  AffineConstraint base(agler_r_matrices(points, specs), HermitianMatrix::zero(n));
  const HermitianMatrix eye = HermitianMatrix::identity(n);
  const HermitianMatrix ones = HermitianMatrix::ones(n);
  auto feasible = [&](double m) {
    AffineConstraint c(base.r_matrices(), m * eye - ones);
    return dykstra_solve(c, options.solver).success;
  };
  return bisect_lower_edge(feasible, 1.0, options);
}

double condition_b_constant(const PolyPointSet& points, const ProductKernelSpec& specs,
                            const BisectionOptions& options) {
  require_points(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  AffineConstraint base(agler_r_matrices(points, specs), HermitianMatrix::zero(n));
  const HermitianMatrix eye = HermitianMatrix::identity(n);
  const HermitianMatrix ones = HermitianMatrix::ones(n);
  auto feasible = [&](double nb) {
    AffineConstraint c(base.r_matrices(), ones - nb * eye);
    return dykstra_solve(c, options.solver).success;
  };
  if (feasible(1.0)) return 1.0;
  // N = 0 is always feasible: Delta^1 = J / R_1 is the kernel matrix of k_1.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < options.max_iterations && hi - lo > options.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

double pick_constant_for_values(const PolyPointSet& points, const ProductKernelSpec& specs,
                                std::span<const Complex> values, const BisectionOptions& options) {
  require_points(points);
  if (values.size() != points.size()) throw ArgumentError("number of values does not match number of points");
  const auto n = static_cast<Eigen::Index>(points.size());
  CVector w(n);
  double max_abs2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = values[i];
    max_abs2 = std::max(max_abs2, std::norm(values[i]));
  }
  const HermitianMatrix ww(w * w.adjoint());
  const HermitianMatrix ones = HermitianMatrix::ones(n);
  AffineConstraint base(agler_r_matrices(points, specs), HermitianMatrix::zero(n));
  auto feasible = [&](double c2) {
    AffineConstraint c(base.r_matrices(), c2 * ones - ww);
    return dykstra_solve(c, options.solver).success;
  };
  return std::sqrt(bisect_lower_edge(feasible, max_abs2, options));
}

bool vector_valued_feasible(const PolyPointSet& points, const ProductKernelSpec& specs, double n_bound,
                            const DykstraOptions& options) {
  if (!(n_bound > 0.0 && n_bound <= 1.0)) throw ArgumentError("N must lie in (0, 1]");
  require_points(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  const HermitianMatrix target = HermitianMatrix::ones(n) - n_bound * HermitianMatrix::identity(n);
  return agler_feasible(points, specs, target, options).feasible;
}

} // namespace interp
