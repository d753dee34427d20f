#include "interp/fuchsian.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "interp/errors.hpp"

namespace interp {

namespace {

constexpr double kActionTolerance = 1e-10;
constexpr double kOrbitTolerance = 1e-9;

const std::array<Complex, 3> kTestPoints = {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(0.0, 0.5)};

bool same_action(const MobiusMap& f, const MobiusMap& g) {
  for (Complex z : kTestPoints) {
    if (std::abs(f.apply(z) - g.apply(z)) > kActionTolerance) return false;
  }
  return true;
}

} // namespace

MobiusMap::MobiusMap(double theta, Complex a) : theta_(theta), a_(a) {
  if (!std::isfinite(theta) || !std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0)) {
    throw DomainError("Mobius parameter a must lie in the open unit disk");
  }
}

Complex MobiusMap::alpha() const { return std::polar(1.0, 0.5 * theta_); }

Complex MobiusMap::beta() const { return -alpha() * a_; }

MobiusMap MobiusMap::from_coefficients(Complex alpha, Complex beta) {
  MobiusMap m;
  m.a_ = -beta / alpha;
  m.theta_ = std::arg(alpha / std::conj(alpha));
  return m;
}

Complex MobiusMap::apply(Complex z) const {
  return std::polar(1.0, theta_) * (z - a_) / (1.0 - std::conj(a_) * z);
}

MobiusMap MobiusMap::inverse() const { return from_coefficients(std::conj(alpha()), -beta()); }

MobiusMap MobiusMap::compose(const MobiusMap& other) const {
  const Complex a1 = alpha(), b1 = beta(), a2 = other.alpha(), b2 = other.beta();
  return from_coefficients(a1 * a2 + b1 * std::conj(b2), a1 * b2 + b1 * std::conj(a2));
}

double MobiusMap::normalized_trace() const {
  const Complex al = alpha();
  const double det = std::norm(al) - std::norm(beta());
  return std::abs(2.0 * al.real()) / std::sqrt(det);
}

bool MobiusMap::has_interior_fixed_point() const {
  return normalized_trace() < 2.0 - 1e-12;
}

Complex mobius_apply(const MobiusMap& map, Complex z) { return map.apply(z); }

GroupWordList enumerate_group(std::span<const MobiusMap> generators, int max_word_length,
                              std::size_t element_cap) {
  if (max_word_length < 0) throw ArgumentError("max_word_length must be nonnegative");
  GroupWordList out;
  out.generators.assign(generators.begin(), generators.end());
  out.max_word_length = max_word_length;
  out.elements.push_back(MobiusMap::identity());
  out.word_lengths.push_back(0);

  // Letter 2k is generator k, letter 2k+1 its inverse; letter ^ 1 inverts.
  std::vector<MobiusMap> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }

  struct Word {
    MobiusMap map;
    int last_letter;
  };
  std::vector<Word> frontier{{MobiusMap::identity(), -1}};
  for (int length = 1; length <= max_word_length && !frontier.empty(); ++length) {
    std::vector<Word> next;
    for (const auto& word : frontier) {
      for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
        if (word.last_letter >= 0 && l == (word.last_letter ^ 1)) continue;
        MobiusMap candidate = word.map.compose(letters[l]);
        bool seen = false;
        for (const auto& e : out.elements) {
          if (same_action(e, candidate)) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
        if (out.elements.size() >= element_cap) {
          throw BudgetError("group enumeration exceeds the element cap of " + std::to_string(element_cap));
        }
        out.elements.push_back(candidate);
        out.word_lengths.push_back(length);
        next.push_back({candidate, l});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

OrbitSet orbit_set(std::span<const Complex> points, const GroupWordList& group) {
  for (Complex z : points) require_in_disk(z);
  require_distinct(points);
  OrbitSet out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t e = 0; e < group.elements.size(); ++e) {
      const Complex image = group.elements[e].apply(points[i]);
      if (std::abs(image) > 1.0 - kBoundaryMargin) {
        ++out.dropped_near_boundary;
        continue;
      }
      bool duplicate = false;
      for (const auto& existing : out.points) {
        if (std::abs(existing.point - image) > kOrbitTolerance) continue;
        if (existing.orbit == i) {
          duplicate = true;
          break;
        }
        std::ostringstream os;
        os << "points " << existing.orbit << " and " << i
           << " lie on the same orbit of the truncated group";
        throw ArgumentError(os.str());
      }
      if (!duplicate) out.points.push_back({i, e, image});
    }
  }
  return out;
}

CMatrix composition_matrix(const MobiusMap& map, int degree) {
  if (degree < 0) throw ArgumentError("degree must be nonnegative");
  const Eigen::Index size = degree + 1;
  // Taylor series of map(z) = e^{i theta} (z - a) sum_k (conj(a) z)^k.
  const Complex rot = std::polar(1.0, map.theta());
  const Complex a = map.a();
  const Complex abar = std::conj(a);
  CVector series = CVector::Zero(size);
  Complex prev = 1.0;  // conj(a)^{k-1}
  series(0) = -rot * a;
  for (Eigen::Index k = 1; k < size; ++k) {
    series(k) = rot * (prev - a * prev * abar);
    prev *= abar;
  }

  CMatrix c = CMatrix::Zero(size, size);
  CVector column = CVector::Zero(size);
  column(0) = 1.0;
  for (Eigen::Index m = 0; m < size; ++m) {
    c.col(m) = column;
    CVector product = CVector::Zero(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      if (column(i) == Complex(0.0)) continue;
      product.tail(size - i) += column(i) * series.head(size - i);
    }
    column = std::move(product);
  }
  return c;
}

GammaKernelApprox::GammaKernelApprox(std::vector<MobiusMap> generators, int degree, double sv_cutoff)
    : generators_(std::move(generators)), degree_(degree), sv_cutoff_(sv_cutoff) {
  if (degree < 1) throw ArgumentError("Gamma-kernel degree must be at least 1");
  if (!(sv_cutoff > 0.0)) throw ArgumentError("singular value cutoff must be positive");
  const Eigen::Index size = degree + 1;
  if (generators_.empty()) {
    basis_ = CMatrix::Identity(size, size);
    return;
  }
  CMatrix stacked(size * static_cast<Eigen::Index>(generators_.size()), size);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    stacked.middleRows(static_cast<Eigen::Index>(g) * size, size) =
        composition_matrix(generators_[g], degree) - CMatrix::Identity(size, size);
  }
  Eigen::BDCSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= sv_cutoff) {
      kept.push_back(k);
      kept_sv_ = std::max(kept_sv_, sv(k));
    }
  }
  if (kept.empty()) throw NumericError("fixed subspace is empty; constants should always be invariant");
  CMatrix raw(size, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) raw.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(kept[k]);
  Eigen::HouseholderQR<CMatrix> qr(raw);
  basis_ = qr.householderQ() * CMatrix::Identity(size, raw.cols());
}

CVector GammaKernelApprox::features(Complex z) const {
  require_in_disk(z);
  CVector phi(degree_ + 1);
  Complex power = 1.0;
  for (int m = 0; m <= degree_; ++m) {
    phi(m) = power;
    power *= z;
  }
  return basis_.transpose() * phi;
}

Complex GammaKernelApprox::eval(Complex z, Complex w) const {
  const CVector ez = features(z);
  const CVector ew = features(w);
  return (ez.array() * ew.array().conjugate()).sum();
}

std::span<const Complex> GammaKernelApprox::default_grid() {
  static const std::array<Complex, 7> grid = {Complex(0.0, 0.0), Complex(0.2, 0.0), Complex(-0.2, 0.0),
                                              Complex(0.0, 0.2), Complex(0.0, -0.2), Complex(0.1, 0.0),
                                              Complex(0.1, 0.1)};
  return grid;
}

double GammaKernelApprox::invariance_residual(std::span<const Complex> grid) const {
  double worst = 0.0;
  for (const auto& g : generators_) {
    for (Complex z : grid) {
      const Complex gz = g.apply(z);
      for (Complex w : grid) worst = std::max(worst, std::abs(eval(gz, w) - eval(z, w)));
    }
  }
  return worst;
}

double GammaKernelApprox::invariance_residual() const { return invariance_residual(default_grid()); }

GammaKernelApprox gamma_kernel(std::span<const MobiusMap> generators, int degree, double sv_cutoff) {
  return GammaKernelApprox(std::vector<MobiusMap>(generators.begin(), generators.end()), degree, sv_cutoff);
}

GammaSequenceReport analyze_gamma_sequence(std::span<const Complex> points,
                                           std::span<const MobiusMap> generators, int degree,
                                           int max_word_length, const GammaAnalysisOptions& options) {
  if (points.empty()) throw ArgumentError("need at least one point");
  GammaSequenceReport report;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].has_interior_fixed_point()) {
      report.warnings.push_back("generator " + std::to_string(g) +
                                " has a fixed point inside the disk (elliptic); the group does not act freely");
    }
  }

  const GroupWordList group = enumerate_group(generators, max_word_length, options.element_cap);
  const OrbitSet orbits = orbit_set(points, group);

  const GammaKernelApprox kernel = gamma_kernel(generators, degree, options.sv_cutoff);
  report.degree = degree;
  report.kernel_dimension = kernel.dimension();
  report.invariance_residual = kernel.invariance_residual();
  report.gamma_riesz = riesz_bounds(normalized_gramian(kernel, points), options.riesz_tolerance);
  if (points.size() >= 2) report.gamma_weak_separation = weak_separation(kernel, points);

  std::vector<Complex> orbit_points;
  orbit_points.reserve(orbits.points.size());
  for (const auto& p : orbits.points) orbit_points.push_back(p.point);
  const KernelSpec szego = KernelSpec::szego();
  const std::span<const Complex> orbit_span(orbit_points);
  report.group_size = group.elements.size();
  report.orbit_size = orbit_points.size();
  report.orbit_dropped = orbits.dropped_near_boundary;
  report.orbit_riesz = riesz_bounds(normalized_gramian(szego, orbit_span), options.riesz_tolerance);
  if (orbit_points.size() >= 2) report.orbit_weak_separation = weak_separation(szego, orbit_span);
  report.orbit_strong_separation = strong_separation_disk(orbit_span);

  std::ostringstream os;
  os << "Gamma-kernel truncated at degree " << degree << " (fixed-subspace dimension " << kernel.dimension()
     << ", invariance residual " << report.invariance_residual << ")";
  report.warnings.push_back(os.str());
  if (!generators.empty()) {
    report.warnings.push_back("orbit diagnostics use group words up to length " + std::to_string(max_word_length));
  }
  if (orbits.dropped_near_boundary > 0) {
    report.warnings.push_back(std::to_string(orbits.dropped_near_boundary) +
                              " orbit points beyond the boundary margin were dropped");
  }
  return report;
}

} // namespace interp
