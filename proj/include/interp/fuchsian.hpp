#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interp/gramian.hpp"
#include "interp/kernels.hpp"
#include "interp/linalg.hpp"

namespace interp {

/// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z).
///
/// Internally carried as the SU(1,1)-type coefficient pair (alpha, beta) with
/// z -> (alpha z + beta) / (conj(beta) z + conj(alpha)); composition and
/// inversion act on the pair and the normal form is recomputed from it.
class MobiusMap {
public:
  /// Identity.
  MobiusMap() = default;
  /// Throws DomainError unless |a| < 1.
  MobiusMap(double theta, Complex a);

  static MobiusMap identity() { return {}; }
  static MobiusMap rotation(double theta) { return {theta, 0.0}; }

  double theta() const noexcept { return theta_; }
  Complex a() const noexcept { return a_; }

  Complex apply(Complex z) const;
  Complex operator()(Complex z) const { return apply(z); }

  MobiusMap inverse() const;
  /// (*this) o other, i.e. z -> this(other(z)).
  MobiusMap compose(const MobiusMap& other) const;

  /// |trace| / sqrt(det) of the normalized coefficient matrix: < 2 elliptic
  /// (fixed point in the disk), 2 parabolic or identity, > 2 hyperbolic.
  double normalized_trace() const;
  bool has_interior_fixed_point() const;

private:
  static MobiusMap from_coefficients(Complex alpha, Complex beta);
  Complex alpha() const;
  Complex beta() const;

  double theta_ = 0.0;
  Complex a_ = 0.0;
};

Complex mobius_apply(const MobiusMap& map, Complex z);

struct GroupWordList {
  std::vector<MobiusMap> generators;
  int max_word_length = 0;
  /// elements[0] is the identity; elements are distinct reduced words, at
  /// most one per action on the test points {0, 0.3, 0.5i}.
  std::vector<MobiusMap> elements;
  std::vector<int> word_lengths;
};

/// All reduced words in the generators and their inverses up to
/// max_word_length, deduplicated by action. Throws BudgetError when the
/// element count would exceed element_cap.
GroupWordList enumerate_group(std::span<const MobiusMap> generators, int max_word_length,
                              std::size_t element_cap = 10000);

struct OrbitPoint {
  std::size_t orbit = 0;    // index of the input point
  std::size_t element = 0;  // index into GroupWordList::elements
  Complex point;
};

struct OrbitSet {
  std::vector<OrbitPoint> points;
  /// Images discarded for falling outside |z| <= 1 - kBoundaryMargin.
  std::size_t dropped_near_boundary = 0;
};

/// The truncated orbit set Gamma Z. Images within 1e-9 of an earlier image of
/// the same orbit are dropped. Throws ArgumentError naming the pair when
/// images of two different input points coincide within 1e-9.
OrbitSet orbit_set(std::span<const Complex> points, const GroupWordList& group);

/// (N+1) x (N+1) matrix whose column m holds the degree <= N Taylor
/// coefficients of map(z)^m: the compression of f -> f o map to polynomials.
CMatrix composition_matrix(const MobiusMap& map, int degree);

/// Degree-N surrogate for the reproducing kernel of the Gamma-fixed subspace
/// of H^2: the common near-null space of (C_gamma - I) over the generators,
/// with the monomials z^0..z^N as orthonormal basis.
class GammaKernelApprox {
public:
  GammaKernelApprox(std::vector<MobiusMap> generators, int degree, double sv_cutoff);

  int degree() const noexcept { return degree_; }
  double sv_cutoff() const noexcept { return sv_cutoff_; }
  /// Orthonormal coefficient vectors, one per column.
  const CMatrix& basis() const noexcept { return basis_; }
  Eigen::Index dimension() const noexcept { return basis_.cols(); }
  /// Largest singular value kept below the cutoff.
  double largest_kept_singular_value() const noexcept { return kept_sv_; }

  Complex eval(Complex z, Complex w) const;
  Complex operator()(Complex z, Complex w) const { return eval(z, w); }

  /// max |K(gamma(z), w) - K(z, w)| over generators and grid pairs.
  double invariance_residual(std::span<const Complex> grid) const;
  double invariance_residual() const;

  static std::span<const Complex> default_grid();

private:
  CVector features(Complex z) const;

  std::vector<MobiusMap> generators_;
  int degree_;
  double sv_cutoff_;
  CMatrix basis_;
  double kept_sv_ = 0.0;
};

GammaKernelApprox gamma_kernel(std::span<const MobiusMap> generators, int degree, double sv_cutoff = 1e-6);

struct GammaAnalysisOptions {
  double sv_cutoff = 1e-6;
  double riesz_tolerance = 1e-3;
  std::size_t element_cap = 10000;
};

struct GammaSequenceReport {
  // Gamma-kernel side.
  RieszReport gamma_riesz;
  std::optional<double> gamma_weak_separation;  // absent for a single point
  double invariance_residual = 0.0;
  Eigen::Index kernel_dimension = 0;
  int degree = 0;

  // Orbit set Gamma Z under the Szego kernel, truncated at max_word_length.
  std::size_t group_size = 0;
  std::size_t orbit_size = 0;
  std::size_t orbit_dropped = 0;
  RieszReport orbit_riesz;
  std::optional<double> orbit_weak_separation;
  double orbit_strong_separation = 1.0;

  std::vector<std::string> warnings;
};

GammaSequenceReport analyze_gamma_sequence(std::span<const Complex> points,
                                           std::span<const MobiusMap> generators, int degree,
                                           int max_word_length, const GammaAnalysisOptions& options = {});

} // namespace interp
