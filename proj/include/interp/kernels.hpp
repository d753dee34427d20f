#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace interp {

using Complex = std::complex<double>;

/// A point of the polydisc; one coordinate per factor.
using PolyPoint = std::vector<Complex>;

/// Points with |z| > 1 - kBoundaryMargin are rejected.
inline constexpr double kBoundaryMargin = 1e-9;

/// Throws DomainError unless |z| <= 1 - kBoundaryMargin and z is finite.
void require_in_disk(Complex z);
void require_in_polydisc(const PolyPoint& z);

/// Normalized complete-Pick kernel on the disk,
///
///   1/k(z,w) = 1 - sum_i c_i (z conj(w))^i ,
///
/// given by finitely many nonnegative coefficients with sum <= 1.
/// coeffs = {1} is the Szego kernel.
class KernelSpec {
public:
  /// Throws DomainError if a coefficient is negative or non-finite, the sum
  /// exceeds one, or every coefficient is zero.
  explicit KernelSpec(std::vector<double> coeffs);

  static KernelSpec szego() { return KernelSpec({1.0}); }

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  bool is_szego() const noexcept;

  /// k(z,w); both points must lie in the disk.
  Complex eval(Complex z, Complex w) const;
  /// 1/k(z,w) = 1 - <b(z), b(w)>.
  Complex inverse(Complex z, Complex w) const;

  Complex operator()(Complex z, Complex w) const { return eval(z, w); }

private:
  Complex inverse_unchecked(Complex z, Complex w) const noexcept;

  std::vector<double> coeffs_;
};

/// Product kernel k(z,w) = prod_j k_j(z_j, w_j) on the d-dimensional polydisc.
class ProductKernelSpec {
public:
  explicit ProductKernelSpec(std::vector<KernelSpec> factors);

  static ProductKernelSpec szego(std::size_t dim);

  std::size_t dim() const noexcept { return factors_.size(); }
  const KernelSpec& factor(std::size_t l) const { return factors_.at(l); }
  const std::vector<KernelSpec>& factors() const noexcept { return factors_; }

  /// Throws ArgumentError if either point does not have dim() coordinates.
  Complex eval(const PolyPoint& z, const PolyPoint& w) const;

  Complex operator()(const PolyPoint& z, const PolyPoint& w) const { return eval(z, w); }

private:
  std::vector<KernelSpec> factors_;
};

Complex eval_kernel(const KernelSpec& spec, Complex z, Complex w);
Complex inv_kernel_form(const KernelSpec& spec, Complex z, Complex w);
Complex product_kernel(const ProductKernelSpec& spec, const PolyPoint& z, const PolyPoint& w);

/// Pseudo-hyperbolic distance |(z - w) / (1 - conj(w) z)|.
double pseudo_hyperbolic(Complex z, Complex w);

/// Kernel semimetric
///
///   rho(x,y) = sqrt(1 - |K(x,y)|^2 / (K(x,x) K(y,y)))
///
/// for any kernel callable K(x,y) -> Complex. Throws NumericError if a
/// diagonal value is not strictly positive.
template <class Kernel, class Point>
double rho_semimetric(const Kernel& kernel, const Point& x, const Point& y);

double point_distance(Complex a, Complex b);
double point_distance(const PolyPoint& a, const PolyPoint& b);

/// Minimum separation between distinct points accepted as "not duplicates".
inline constexpr double kDuplicateTolerance = 1e-12;

/// Throws ArgumentError if two points lie within kDuplicateTolerance.
template <class Point>
void require_distinct(std::span<const Point> points);

// ---------------------------------------------------------------------------

namespace detail {
double positive_diagonal(Complex value);
[[noreturn]] void throw_duplicate(std::size_t i, std::size_t j);
} // namespace detail

template <class Kernel, class Point>
double rho_semimetric(const Kernel& kernel, const Point& x, const Point& y) {
  const double kxx = detail::positive_diagonal(kernel(x, x));
  const double kyy = detail::positive_diagonal(kernel(y, y));
  const double kxy = std::norm(kernel(x, y));
  const double ratio = kxy / (kxx * kyy);
  // Cauchy-Schwarz gives ratio <= 1; rounding can push it slightly above.
  return std::sqrt(std::clamp(1.0 - ratio, 0.0, 1.0));
}

template <class Point>
void require_distinct(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (point_distance(points[i], points[j]) <= kDuplicateTolerance) {
        detail::throw_duplicate(i, j);
      }
    }
  }
}

} // namespace interp
