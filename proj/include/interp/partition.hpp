#pragma once

#include <span>
#include <vector>

#include "interp/errors.hpp"
#include "interp/gramian.hpp"
#include "interp/kernels.hpp"

namespace interp {

/// A split of a point list into classes. Classes hold indices into the input.
struct PartitionResult {
  std::vector<std::vector<std::size_t>> classes;
  double epsilon = 0.0;
  /// Filled by verify_partition, one entry per class.
  std::vector<double> per_class_lambda_min;
  double tolerance = 0.0;
  bool verified = false;

  template <class Point>
  std::vector<Point> class_points(std::span<const Point> points, std::size_t c) const {
    std::vector<Point> out;
    out.reserve(classes.at(c).size());
    for (std::size_t i : classes[c]) out.push_back(points[i]);
    return out;
  }
};

/// Greedy first-fit coloring in input order of the graph joining points with
/// rho < epsilon. Each class is epsilon-separated and the class count is at
/// most 1 + the maximum degree of that graph.
template <class Kernel, class Point>
PartitionResult partition_separated(const Kernel& kernel, std::span<const Point> points, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
  require_distinct(points);
  PartitionResult result;
  result.epsilon = epsilon;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool placed = false;
    for (auto& cls : result.classes) {
      bool fits = true;
      for (std::size_t j : cls) {
        if (rho_semimetric(kernel, points[i], points[j]) < epsilon) {
          fits = false;
          break;
        }
      }
      if (fits) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) result.classes.push_back({i});
  }
  return result;
}

/// Fills per_class_lambda_min with lambda_min of each class's normalized
/// Gramian; verified is true iff every value exceeds the tolerance.
template <class Kernel, class Point>
PartitionResult verify_partition(PartitionResult result, const Kernel& kernel, std::span<const Point> points,
                                 double tolerance) {
  result.per_class_lambda_min.clear();
  result.tolerance = tolerance;
  result.verified = true;
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    if (result.classes[c].empty()) throw ArgumentError("partition has an empty class");
    const std::vector<Point> members = result.class_points(points, c);
    const double lmin = normalized_gramian(kernel, std::span<const Point>(members)).min_eigenvalue();
    result.per_class_lambda_min.push_back(lmin);
    result.verified = result.verified && lmin > tolerance;
  }
  return result;
}

} // namespace interp
