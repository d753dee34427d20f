#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "interp/errors.hpp"
#include "interp/gramian.hpp"
#include "test_support.hpp"

using namespace interp;
using doctest::Approx;

namespace {

const KernelSpec kSzego = KernelSpec::szego();

HermitianMatrix gram(std::vector<Complex> pts) {
  return normalized_gramian(kSzego, std::span<const Complex>(pts));
}

// Blaschke-product oracle for the Szego multiplier distance.
double blaschke_oracle(Complex x, const std::vector<Complex>& set) {
  double prod = 1.0;
  for (Complex s : set) prod *= std::abs((x - s) / (1.0 - std::conj(s) * x));
  return prod;
}

} // namespace

TEST_CASE("normalized_gramian examples") {
  CHECK(gram({0.0}).matrix()(0, 0) == Complex(1.0));
  const HermitianMatrix g = gram({0.0, 0.5});
  // K(0,0.5) = 1, K(0.5,0.5) = 4/3.
  CHECK(std::abs(g(0, 1) - 1.0 / std::sqrt(4.0 / 3.0)) < 1e-15);
  CHECK(g(0, 1).real() == Approx(0.8660254).epsilon(1e-7));
  CHECK(gram({0.0, 0.9})(0, 1).real() == Approx(1.0 / std::sqrt(1.0 / 0.19)).epsilon(1e-14));
  CHECK(g(0, 0) == Complex(1.0));
  CHECK(g(1, 1) == Complex(1.0));
}

TEST_CASE("normalized_gramian errors") {
  CHECK_THROWS_AS(gram({}), ArgumentError);
  CHECK_THROWS_AS(gram({0.3, 0.3}), ArgumentError);
  auto broken = [](Complex, Complex) { return Complex(0.0); };
  std::vector<Complex> pts{0.1, 0.2};
  CHECK_THROWS_AS(normalized_gramian(broken, std::span<const Complex>(pts)), NumericError);
}

TEST_CASE("riesz_bounds examples") {
  const RieszReport one = riesz_bounds(gram({0.0}), 1e-3);
  CHECK(one.lambda_min == Approx(1.0));
  CHECK(one.lambda_max == Approx(1.0));
  CHECK(one.is_riesz);

  const double g5 = std::sqrt(0.75);
  const RieszReport r5 = riesz_bounds(gram({0.0, 0.5}), 1e-3);
  CHECK(r5.lambda_min == Approx(1.0 - g5).epsilon(1e-12));
  CHECK(r5.lambda_max == Approx(1.0 + g5).epsilon(1e-12));
  CHECK(r5.carleson_constant == r5.lambda_max);

  const double g9 = std::sqrt(0.19);
  const RieszReport r9 = riesz_bounds(gram({0.0, 0.9}), 1e-3);
  CHECK(r9.lambda_min == Approx(1.0 - g9).epsilon(1e-12));
  CHECK(r9.lambda_max == Approx(1.0 + g9).epsilon(1e-12));
  CHECK(r9.lambda_min == Approx(0.5641101).epsilon(1e-7));

  CHECK_FALSE(riesz_bounds(gram({0.0, 0.01}), 1e-3).is_riesz);
}

TEST_CASE("weak_separation examples") {
  std::vector<Complex> two{0.0, 0.5};
  std::vector<Complex> three{0.0, 0.5, -0.5};
  std::vector<Complex> dup{0.3, 0.3 + 1e-13};
  std::vector<Complex> one{0.3};
  CHECK(weak_separation(kSzego, std::span<const Complex>(two)) == Approx(0.5).epsilon(1e-14));
  CHECK(weak_separation(kSzego, std::span<const Complex>(three)) == Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(weak_separation(kSzego, std::span<const Complex>(dup)), ArgumentError);
  CHECK_THROWS_AS(weak_separation(kSzego, std::span<const Complex>(one)), ArgumentError);
}

TEST_CASE("strong_separation_disk examples") {
  std::vector<Complex> one{0.7};
  std::vector<Complex> two{0.0, 0.5};
  std::vector<Complex> three{0.0, 0.5, -0.5};
  CHECK(strong_separation_disk(one) == 1.0);
  CHECK(strong_separation_disk(two) == Approx(0.5).epsilon(1e-14));
  // Products {0.25, 0.5 * 0.8, 0.5 * 0.8}.
  CHECK(strong_separation_disk(three) == Approx(0.25).epsilon(1e-14));
  std::vector<Complex> dup{0.2, 0.2};
  CHECK_THROWS_AS(strong_separation_disk(dup), ArgumentError);
}

TEST_CASE("multiplier_distance examples") {
  std::vector<Complex> empty;
  std::vector<Complex> self{0.5};
  std::vector<Complex> origin{0.0};
  CHECK(multiplier_distance(0.5, empty, kSzego) == 1.0);
  CHECK(multiplier_distance(0.5, self, kSzego) == 0.0);
  CHECK(multiplier_distance(0.5, origin, kSzego) == Approx(0.5).epsilon(1e-6));
  MultiplierDistanceOptions bad;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(multiplier_distance(0.5, origin, kSzego, bad), ArgumentError);
}

TEST_CASE("multiplier_distance matches the Blaschke product") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> size(1, 3);
  for (int s = 0; s < 60; ++s) {
    const Complex x = testing::random_disk_point(rng);
    const auto set = testing::random_disk_points(rng, static_cast<std::size_t>(size(rng)));
    CHECK(std::abs(multiplier_distance(x, set, kSzego) - blaschke_oracle(x, set)) < 1e-6);
  }
}

TEST_CASE("multiplier_distance is monotone in the set") {
  std::mt19937_64 rng(19);
  const KernelSpec spec({0.3, 0.5});
  for (int s = 0; s < 20; ++s) {
    const Complex x = testing::random_disk_point(rng);
    std::vector<Complex> set;
    double prev = multiplier_distance(x, set, spec);
    for (int k = 0; k < 4; ++k) {
      set.push_back(testing::random_disk_point(rng));
      const double next = multiplier_distance(x, set, spec);
      CHECK(next <= prev + 1e-7);
      CHECK(next >= 0.0);
      prev = next;
    }
  }
}

TEST_CASE("normalized Gramians: unit diagonal, PSD, 2x2 trace identity") {
  std::mt19937_64 rng(23);
  for (int s = 0; s < 100; ++s) {
    const KernelSpec spec = testing::random_kernel_spec(rng);
    const auto pts = testing::random_disk_points(rng, 6);
    const HermitianMatrix g = normalized_gramian(spec, std::span<const Complex>(pts));
    for (Eigen::Index i = 0; i < g.size(); ++i) CHECK(g(i, i) == Complex(1.0));
    CHECK(g.min_eigenvalue() >= -1e-10 * 6);

    const std::vector<Complex> pair(pts.begin(), pts.begin() + 2);
    const RieszReport r = riesz_bounds(normalized_gramian(spec, std::span<const Complex>(pair)), 1e-3);
    CHECK(r.lambda_min + r.lambda_max == Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("separation never increases when a point is added") {
  std::mt19937_64 rng(29);
  for (int s = 0; s < 100; ++s) {
    auto pts = testing::random_disk_points(rng, 3);
    double weak = weak_separation(kSzego, std::span<const Complex>(pts));
    double strong = strong_separation_disk(pts);
    for (int k = 0; k < 4; ++k) {
      pts.push_back(testing::random_disk_point(rng));
      const double w2 = weak_separation(kSzego, std::span<const Complex>(pts));
      const double s2 = strong_separation_disk(pts);
      CHECK(w2 <= weak);
      CHECK(s2 <= strong);
      weak = w2;
      strong = s2;
    }
  }
}

TEST_CASE("bounded-and-below Gramians satisfy the unimodular Pick family") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < 20; ++s) {
    const auto pts = testing::random_disk_points(rng, 6);
    const HermitianMatrix g = normalized_gramian(kSzego, std::span<const Complex>(pts));
    const RieszReport r = riesz_bounds(g, 0.0);
    const double b2 = r.lambda_max / r.lambda_min;
    for (int t = 0; t < 100; ++t) {
      CVector w(6);
      for (auto& x : w) x = std::polar(1.0, 2.0 * M_PI * unit(rng));
      const CMatrix dgd = w.asDiagonal() * g.matrix() * w.conjugate().asDiagonal();
      const HermitianMatrix family(b2 * g.matrix() - dgd);
      CHECK(family.min_eigenvalue() >= -1e-9);
    }
  }
}

TEST_CASE("a violated Pick family certifies a large condition number") {
  // For B^2 below lambda_max/lambda_min some unimodular w violates positivity
  // (w = the sign pattern of the bottom eigenvector does it for nearby points).
  std::vector<Complex> pts{0.0, 0.05, 0.5};
  const HermitianMatrix g = normalized_gramian(kSzego, std::span<const Complex>(pts));
  const RieszReport r = riesz_bounds(g, 0.0);
  const double kappa = r.lambda_max / r.lambda_min;
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  for (double b2 : {1.0, 2.0, 0.5 * kappa, 0.9 * kappa}) {
    for (int t = 0; t < 200; ++t) {
      CVector w(3);
      for (auto& x : w) x = std::polar(1.0, 2.0 * M_PI * unit(rng));
      const CMatrix dgd = w.asDiagonal() * g.matrix() * w.conjugate().asDiagonal();
      if (HermitianMatrix(b2 * g.matrix() - dgd).min_eigenvalue() < -1e-9) {
        ++violations;
        CHECK(kappa > b2);
      }
    }
  }
  CHECK(violations > 0);
}
