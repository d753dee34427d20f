// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "interp/fuchsian.hpp"
#include "interp/gramian.hpp"
#include "interp/partition.hpp"
#include "interp/pick.hpp"
#include "interp/sdp.hpp"
#include "test_support.hpp"

using namespace interp;
using interp::testing::random_disk_point;
using interp::testing::random_disk_points;
using interp::testing::random_kernel_spec;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

double raw_min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Every solver verdict claiming success is rechecked here with plain Eigen,
// without going through the library's certificate code.
struct CertificateAudit {
  int checked = 0;
  int violations = 0;
  double worst_residual = 0.0;
  double worst_margin = 0.0;

  void record(const std::vector<CMatrix>& r, const CMatrix& target, const std::vector<HermitianMatrix>& blocks,
              double tolerance) {
    CMatrix acc = target;
    for (std::size_t l = 0; l < r.size(); ++l) acc -= blocks[l].matrix().cwiseProduct(r[l]);
    const double residual = acc.norm();
    double margin = 0.0;
    for (const auto& b : blocks) margin = std::min(margin, raw_min_eigenvalue(b.matrix()));
    ++checked;
    worst_residual = std::max(worst_residual, residual);
    worst_margin = std::min(worst_margin, margin);
    if (residual > tolerance || margin < -tolerance) ++violations;
  }
};

CertificateAudit audit;

std::vector<CMatrix> raw_r(const PolyPointSet& points, const ProductKernelSpec& specs) {
  std::vector<CMatrix> out;
  for (const auto& r : agler_r_matrices(points, specs)) out.push_back(r.matrix());
  return out;
}

// ---------------------------------------------------------------------------

Verdict kernel_laws() {
  std::mt19937_64 rng(101);
  Verdict v;
  double worst_sym = 0.0, worst_recip = 0.0, worst_psd = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const KernelSpec spec = random_kernel_spec(rng);
    const Complex z = random_disk_point(rng, 0.95);
    const Complex w = random_disk_point(rng, 0.95);
    const Complex k = spec.eval(z, w);
    worst_sym = std::max(worst_sym, std::abs(k - std::conj(spec.eval(w, z))) / std::abs(k));
    worst_recip = std::max(worst_recip, std::abs(k * spec.inverse(z, w) - 1.0));
    const std::vector<Complex> pts = random_disk_points(rng, 8, 0.95);
    const double lmin = kernel_matrix(spec, std::span<const Complex>(pts)).min_eigenvalue();
    worst_psd = std::min(worst_psd, lmin);
  }
  v.pass = worst_sym <= 1e-14 && worst_recip <= 1e-12 && worst_psd >= -1e-10 * 8;
  std::ostringstream os;
  os << "symmetry " << worst_sym << ", reciprocal " << worst_recip << ", min eigenvalue " << worst_psd;
  v.detail = os.str();
  return v;
}

Verdict szego_equivalence() {
  std::mt19937_64 rng(202);
  const KernelSpec szego = KernelSpec::szego();
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Complex z = random_disk_point(rng, 0.99);
    const Complex w = random_disk_point(rng, 0.99);
    const double direct = std::abs((z - w) / (1.0 - std::conj(w) * z));
    worst = std::max(worst, std::abs(rho_semimetric(szego, z, w) - direct));
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  return {worst <= 1e-12, os.str()};
}

Verdict two_point_closed_forms() {
  const ProductKernelSpec szego = ProductKernelSpec::szego(1);
  double worst = 0.0;
  std::ostringstream os;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const std::vector<Complex> pts{0.0, r};
    const PolyPointSet poly = as_poly(pts);
    const double root = std::sqrt(1.0 - r * r);
    const double m = condition_a_constant(poly, szego);
    const double n = condition_b_constant(poly, szego);
    worst = std::max({worst, std::abs(m - (1.0 + root)), std::abs(n - (1.0 - root))});
  }
  os << "max deviation " << worst;
  return {worst <= 1e-4, os.str()};
}

Verdict one_variable_flip() {
  std::mt19937_64 rng(404);
  int bad = 0;
  for (int s = 0; s < 50; ++s) {
    const KernelSpec spec = s % 2 == 0 ? KernelSpec::szego() : random_kernel_spec(rng);
    PickProblem problem;
    const std::vector<Complex> pts = random_disk_points(rng, 3);
    problem.points = as_poly(pts);
    problem.values = random_disk_points(rng, 3);
    const double c = pick_constant_for_values(problem.points, ProductKernelSpec({spec}), problem.values);
    problem.bound = c + 1e-4;
    const PickTestResult above = pick_psd_test(problem, spec);
    problem.bound = c - 1e-4;
    const PickTestResult below = pick_psd_test(problem, spec);
    if (!above.feasible || below.feasible) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of 50 misplaced flips"};
}

// Smallest C for which w/C obeys the two-point Schwarz-Pick inequality,
// found by bisection.
double two_point_disk_constant(Complex z1, Complex z2, Complex w1, Complex w2) {
  const double rho = std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
  const double floor = std::max(std::abs(w1), std::abs(w2));
  auto ok = [&](double c) {
    const Complex a = w1 / c, b = w2 / c;
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0) return false;
    return std::abs((a - b) / (1.0 - std::conj(b) * a)) <= rho;
  };
  double lo = floor, hi = floor + 1.0;
  if (ok(lo)) return lo;
  while (!ok(hi)) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

Verdict diagonal_restriction() {
  std::mt19937_64 rng(505);
  const ProductKernelSpec bidisc = ProductKernelSpec::szego(2);
  const ProductKernelSpec disk = ProductKernelSpec::szego(1);
  double worst = 0.0;
  int infeasible_above = 0;
  for (int s = 0; s < 20; ++s) {
    const std::vector<Complex> z = random_disk_points(rng, 2);
    const std::vector<Complex> w = random_disk_points(rng, 2);
    const PolyPointSet diag{{z[0], z[0]}, {z[1], z[1]}};
    const double c2 = pick_constant_for_values(diag, bidisc, w);
    const double c1 = pick_constant_for_values(as_poly(z), disk, w);
    const double oracle = two_point_disk_constant(z[0], z[1], w[0], w[1]);
    worst = std::max({worst, std::abs(c2 - oracle), std::abs(c1 - oracle)});

    const double c = c2 + 1e-4;
    CMatrix target(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) target(i, j) = c * c - w[i] * std::conj(w[j]);
    const AglerResult res = agler_feasible(diag, bidisc, HermitianMatrix(target));
    if (res.feasible) {
      audit.record(raw_r(diag, bidisc), target, res.decomposition.blocks, DykstraOptions{}.tolerance);
    } else {
      ++infeasible_above;
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst << ", infeasible just above constant " << infeasible_above;
  return {worst <= 1e-4 && infeasible_above == 0, os.str()};
}

Verdict diagonal_scaling_bound() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const KernelSpec szego = KernelSpec::szego();
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const std::vector<Complex> pts = random_disk_points(rng, 6, 0.8);
    const HermitianMatrix g = normalized_gramian(szego, std::span<const Complex>(pts));
    const EigenDecomposition eig = hermitian_eigen(g.matrix());
    const double b2 = eig.values.maxCoeff() / eig.values.minCoeff();
    for (int t = 0; t < 100; ++t) {
      CVector d(6);
      for (auto& x : d) x = std::polar(1.0, angle(rng));
      const CMatrix m = b2 * g.matrix() - d.asDiagonal() * g.matrix() * d.conjugate().asDiagonal();
      worst = std::min(worst, raw_min_eigenvalue(0.5 * (m + m.adjoint())));
    }
  }
  std::ostringstream os;
  os << "min eigenvalue " << worst;
  return {worst >= -1e-9, os.str()};
}

Verdict trivial_group() {
  const GammaKernelApprox k = gamma_kernel({}, 50);
  const std::vector<double> ticks{-0.6, -0.3, 0.0, 0.3, 0.6};
  std::vector<Complex> grid;
  for (double x : ticks)
    for (double y : ticks) grid.emplace_back(x, y);
  double worst = 0.0;
  for (Complex z : grid) {
    for (Complex w : grid) {
      Complex expected = 0.0, power = 1.0;
      for (int m = 0; m <= 50; ++m) {
        expected += power;
        power *= z * std::conj(w);
      }
      worst = std::max(worst, std::abs(k.eval(z, w) - expected));
    }
  }

  const std::vector<Complex> pts{0.0, 0.5};
  const std::span<const Complex> span(pts);
  const KernelSpec szego = KernelSpec::szego();
  const RieszReport disk = riesz_bounds(normalized_gramian(szego, span), 1e-3);
  const GammaSequenceReport rep = analyze_gamma_sequence(span, {}, 50, 0);
  const double disk_gap = std::max({std::abs(rep.gamma_riesz.lambda_min - disk.lambda_min),
                                    std::abs(rep.gamma_riesz.lambda_max - disk.lambda_max),
                                    std::abs(*rep.gamma_weak_separation - weak_separation(szego, span)),
                                    std::abs(rep.orbit_riesz.lambda_min - disk.lambda_min),
                                    std::abs(rep.orbit_strong_separation - strong_separation_disk(span))});
  std::ostringstream os;
  os << "kernel deviation " << worst << ", analysis deviation " << disk_gap;
  return {worst <= 1e-8 && disk_gap <= 1e-8, os.str()};
}

Verdict cyclic_invariance() {
  const std::vector<MobiusMap> gens{MobiusMap(0.0, 0.5)};
  std::vector<double> residuals;
  for (int n : {10, 20, 40}) residuals.push_back(gamma_kernel(gens, n).invariance_residual());
  bool nonincreasing = true;
  for (std::size_t i = 1; i < residuals.size(); ++i) nonincreasing = nonincreasing && residuals[i] <= residuals[i - 1] + 1e-12;
  std::ostringstream os;
  os << "residuals " << residuals[0] << ", " << residuals[1] << ", " << residuals[2];
  return {nonincreasing && residuals.back() < 1e-4, os.str()};
}

Verdict partition_suite() {
  std::mt19937_64 rng(909);
  const KernelSpec szego = KernelSpec::szego();
  const double eps = 0.5;
  int failures = 0;
  double worst_lmin = 1.0;
  for (int s = 0; s < 20; ++s) {
    const std::vector<Complex> pts = random_disk_points(rng, 15, 0.9);
    const std::span<const Complex> span(pts);
    const PartitionResult r = verify_partition(partition_separated(szego, span, eps), szego, span, 1e-3);
    bool ok = r.verified;
    std::vector<int> seen(pts.size(), 0);
    std::size_t max_degree = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t deg = 0;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && pseudo_hyperbolic(pts[i], pts[j]) < eps) ++deg;
      max_degree = std::max(max_degree, deg);
    }
    ok = ok && r.classes.size() <= max_degree + 1;
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      const auto& cls = r.classes[c];
      ok = ok && !cls.empty();
      for (std::size_t i : cls) ++seen.at(i);
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) ok = ok && pseudo_hyperbolic(pts[cls[a]], pts[cls[b]]) >= eps;
      worst_lmin = std::min(worst_lmin, r.per_class_lambda_min[c]);
    }
    for (int k : seen) ok = ok && k == 1;
    if (!ok) ++failures;
  }
  std::ostringstream os;
  os << failures << " of 20 configurations failed, smallest class lambda_min " << worst_lmin;
  return {failures == 0 && worst_lmin > 1e-3, os.str()};
}

Verdict certificate_honesty() {
  std::mt19937_64 rng(1010);
  const ProductKernelSpec bidisc = ProductKernelSpec::szego(2);
  const DykstraOptions opts{};
  int false_success = 0;
  for (int s = 0; s < 20; ++s) {
    PolyPointSet pts;
    for (int i = 0; i < 3; ++i) pts.push_back({random_disk_point(rng), random_disk_point(rng)});
    const std::vector<CMatrix> r = raw_r(pts, bidisc);
    std::vector<HermitianMatrix> rh;
    for (const auto& m : r) rh.emplace_back(m);

    CMatrix target = CMatrix::Zero(3, 3);
    for (const auto& m : r) target += interp::testing::random_psd(rng, 3, 2).cwiseProduct(m);
    const SdpResult feasible = dykstra_solve(AffineConstraint(rh, HermitianMatrix(target)), opts);
    if (feasible.success) audit.record(r, target, feasible.blocks, opts.tolerance);

    // Negative diagonal entries cannot come from PSD blocks against R with a
    // positive diagonal.
    const CMatrix bad = -CMatrix::Identity(3, 3);
    const SdpResult infeasible = dykstra_solve(AffineConstraint(rh, HermitianMatrix(bad)), opts);
    if (infeasible.success) {
      ++false_success;
      audit.record(r, bad, infeasible.blocks, opts.tolerance);
    }
  }
  std::ostringstream os;
  os << audit.checked << " success verdicts rechecked, " << audit.violations << " violations, worst residual "
     << audit.worst_residual << ", worst margin " << audit.worst_margin << ", false successes " << false_success;
  return {audit.checked > 0 && audit.violations == 0 && false_success == 0, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "kernel laws", 5.0, kernel_laws},
      {2, "Szego semimetric equals pseudo-hyperbolic distance", 1.0, szego_equivalence},
      {3, "two-point closed forms", 30.0, two_point_closed_forms},
      {4, "one-variable Pick test flips at the constant", 60.0, one_variable_flip},
      {5, "diagonal bidisc agrees with the disk", 60.0, diagonal_restriction},
      {6, "B^2 G - D G D* is positive", 10.0, diagonal_scaling_bound},
      {7, "trivial group reduces to the disk", 10.0, trivial_group},
      {8, "cyclic group invariance residual", 60.0, cyclic_invariance},
      {9, "separated partition", 10.0, partition_suite},
      {10, "solver certificates recheck", 60.0, certificate_honesty},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = v.pass && secs < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s %2d %s (%.2fs / %.0fs): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
