#include "interp/gramian.hpp"

#include <algorithm>

namespace interp {

RieszReport riesz_bounds(const HermitianMatrix& gram, double tolerance) {
  if (gram.size() == 0) throw ArgumentError("empty Gramian");
  const RVector ev = gram.eigenvalues();
  RieszReport report;
  report.lambda_min = ev(0);
  report.lambda_max = ev(ev.size() - 1);
  report.carleson_constant = report.lambda_max;
  report.tolerance = tolerance;
  report.is_riesz = report.lambda_min > tolerance;
  return report;
}

double strong_separation_disk(std::span<const Complex> points) {
  if (points.empty()) throw ArgumentError("strong separation needs at least one point");
  for (Complex z : points) require_in_disk(z);
  require_distinct(points);
  double best = 1.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    double prod = 1.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k != j) prod *= pseudo_hyperbolic(points[j], points[k]);
    }
    best = std::min(best, prod);
  }
  return best;
}

namespace {

bool pick_positive(const KernelSpec& spec, std::span<const Complex> nodes, double alpha, double delta) {
  // nodes[0] carries the value delta, the rest carry 0.
  const auto n = static_cast<Eigen::Index>(nodes.size());
  const double a2 = alpha * alpha;
  CMatrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double wiwj = (i == 0 && j == 0) ? delta * delta : 0.0;
      p(i, j) = (a2 - wiwj) * spec.eval(nodes[i], nodes[j]);
    }
  }
  return HermitianMatrix(p).min_eigenvalue() >= -1e-10 * static_cast<double>(n);
}

} // namespace

double multiplier_distance(Complex x, std::span<const Complex> set, const KernelSpec& spec,
                           const MultiplierDistanceOptions& options) {
  if (!(options.alpha > 0.0)) throw ArgumentError("alpha must be positive");
  require_in_disk(x);
  for (Complex s : set) {
    require_in_disk(s);
    if (point_distance(x, s) <= kDuplicateTolerance) return 0.0;
  }
  if (set.empty()) return 1.0;

  std::vector<Complex> nodes;
  nodes.reserve(set.size() + 1);
  nodes.push_back(x);
  nodes.insert(nodes.end(), set.begin(), set.end());
  require_distinct(std::span<const Complex>(nodes));

  if (pick_positive(spec, nodes, options.alpha, 1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < options.max_iterations && hi - lo > options.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pick_positive(spec, nodes, options.alpha, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace interp
