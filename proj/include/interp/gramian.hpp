#pragma once

#include <span>
#include <vector>

#include "interp/errors.hpp"
#include "interp/kernels.hpp"
#include "interp/linalg.hpp"

namespace interp {

/// Extreme eigenvalues of a normalized Gramian.
///
/// For a finite prefix the Bessel bound (equivalently the Carleson constant
/// of the measure sum_n K(x_n,x_n)^{-1} delta_{x_n}) is lambda_max; the
/// prefix is a Riesz sequence at the given tolerance iff lambda_min exceeds it.
struct RieszReport {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double carleson_constant = 0.0;
  bool is_riesz = false;
  double tolerance = 0.0;
};

/// Kernel matrix [K(x_i, x_j)] (not normalized).
template <class Kernel, class Point>
HermitianMatrix kernel_matrix(const Kernel& kernel, std::span<const Point> points);

/// G_ij = K(x_i,x_j) / sqrt(K(x_i,x_i) K(x_j,x_j)).
///
/// Throws ArgumentError on an empty or duplicated point list and
/// NumericError when a diagonal kernel value is not positive.
template <class Kernel, class Point>
HermitianMatrix normalized_gramian(const Kernel& kernel, std::span<const Point> points);

RieszReport riesz_bounds(const HermitianMatrix& gram, double tolerance);

/// min_{i != j} rho(x_i, x_j). Requires at least two distinct points.
template <class Kernel, class Point>
double weak_separation(const Kernel& kernel, std::span<const Point> points);

/// inf_j prod_{k != j} |(z_j - z_k) / (1 - conj(z_k) z_j)|; 1 for a single point.
double strong_separation_disk(std::span<const Complex> points);

struct MultiplierDistanceOptions {
  double alpha = 1.0;
  double tolerance = 1e-7;
  int max_iterations = 60;
};

/// sup { |f(x)| : f|_S = 0, ||f||_mult <= 1 } for the complete-Pick kernel
/// `spec`, by bisection on delta over positivity of
/// [(alpha^2 - w_i conj(w_j)) k(z_i, z_j)] with data w = delta at x, 0 on S.
/// Returns 1 for empty S and 0 when x is in S. The result is clamped to [0,1].
double multiplier_distance(Complex x, std::span<const Complex> set, const KernelSpec& spec,
                           const MultiplierDistanceOptions& options = {});

// ---------------------------------------------------------------------------

template <class Kernel, class Point>
HermitianMatrix kernel_matrix(const Kernel& kernel, std::span<const Point> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  CMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      k(i, j) = kernel(points[i], points[j]);
      k(j, i) = std::conj(k(i, j));
    }
  }
  return HermitianMatrix(k);
}

template <class Kernel, class Point>
HermitianMatrix normalized_gramian(const Kernel& kernel, std::span<const Point> points) {
  if (points.empty()) throw ArgumentError("normalized Gramian needs at least one point");
  require_distinct(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  RVector scale(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    scale(i) = 1.0 / std::sqrt(detail::positive_diagonal(kernel(points[i], points[i])));
  }
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = kernel(points[i], points[j]) * scale(i) * scale(j);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return HermitianMatrix(g);
}

template <class Kernel, class Point>
double weak_separation(const Kernel& kernel, std::span<const Point> points) {
  if (points.size() < 2) throw ArgumentError("weak separation needs at least two points");
  require_distinct(points);
  double best = 1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, rho_semimetric(kernel, points[i], points[j]));
    }
  }
  return best;
}

} // namespace interp
