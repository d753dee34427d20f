#include "interp/kernels.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "interp/errors.hpp"

namespace interp {

void require_in_disk(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("point is not finite");
  }
  if (std::abs(z) > 1.0 - kBoundaryMargin) {
    std::ostringstream os;
    os << "point (" << z.real() << ", " << z.imag() << ") lies outside the disk |z| <= 1 - "
       << kBoundaryMargin;
    throw DomainError(os.str());
  }
}

void require_in_polydisc(const PolyPoint& z) {
  if (z.empty()) throw ArgumentError("polydisc point has no coordinates");
  for (Complex c : z) require_in_disk(c);
}

KernelSpec::KernelSpec(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("kernel needs at least one coefficient");
  double sum = 0.0;
  bool any_positive = false;
  for (double c : coeffs_) {
    if (!std::isfinite(c) || c < 0.0) throw DomainError("kernel coefficients must be finite and nonnegative");
    sum += c;
    any_positive = any_positive || c > 0.0;
  }
  if (!any_positive) throw DomainError("kernel needs a positive coefficient");
  if (sum > 1.0 + 1e-15) throw DomainError("kernel coefficients must sum to at most 1");
}

bool KernelSpec::is_szego() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 1.0;
}

Complex KernelSpec::inverse_unchecked(Complex z, Complex w) const noexcept {
  const Complex u = z * std::conj(w);
  Complex power = u;
  Complex acc = 1.0;
  for (double c : coeffs_) {
    acc -= c * power;
    power *= u;
  }
  return acc;
}

Complex KernelSpec::inverse(Complex z, Complex w) const {
  require_in_disk(z);
  require_in_disk(w);
  return inverse_unchecked(z, w);
}

Complex KernelSpec::eval(Complex z, Complex w) const {
  return 1.0 / inverse(z, w);
}

ProductKernelSpec::ProductKernelSpec(std::vector<KernelSpec> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgumentError("product kernel needs at least one factor");
}

ProductKernelSpec ProductKernelSpec::szego(std::size_t dim) {
  return ProductKernelSpec(std::vector<KernelSpec>(dim, KernelSpec::szego()));
}

Complex ProductKernelSpec::eval(const PolyPoint& z, const PolyPoint& w) const {
  if (z.size() != dim() || w.size() != dim()) {
    throw ArgumentError("point dimension does not match product kernel (expected " +
                        std::to_string(dim()) + ")");
  }
  Complex acc = 1.0;
  for (std::size_t l = 0; l < dim(); ++l) acc *= factors_[l].eval(z[l], w[l]);
  return acc;
}

Complex eval_kernel(const KernelSpec& spec, Complex z, Complex w) { return spec.eval(z, w); }

Complex inv_kernel_form(const KernelSpec& spec, Complex z, Complex w) { return spec.inverse(z, w); }

Complex product_kernel(const ProductKernelSpec& spec, const PolyPoint& z, const PolyPoint& w) {
  return spec.eval(z, w);
}

double pseudo_hyperbolic(Complex z, Complex w) {
  return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

double point_distance(Complex a, Complex b) { return std::abs(a - b); }

double point_distance(const PolyPoint& a, const PolyPoint& b) {
  if (a.size() != b.size()) throw ArgumentError("points have different dimensions");
  double sq = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) sq += std::norm(a[l] - b[l]);
  return std::sqrt(sq);
}

namespace detail {

double positive_diagonal(Complex value) {
  if (!(value.real() > 0.0) || !std::isfinite(value.real())) {
    throw NumericError("kernel diagonal value is not strictly positive");
  }
  return value.real();
}

void throw_duplicate(std::size_t i, std::size_t j) {
  throw ArgumentError("points " + std::to_string(i) + " and " + std::to_string(j) +
                      " coincide (within 1e-12)");
}

} // namespace detail
} // namespace interp
