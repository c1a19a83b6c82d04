#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/bessel_series_mp.hpp"
#include "scatter1d/bessel.hpp"
#include "scatter1d/errors.hpp"

using namespace scatter1d;
using bessel::bessel_j;
using bessel::bessel_j_derivative;

namespace {

double scale_at(double nu, cplx w) {
  if (w == cplx{0.0, 0.0}) return 1.0;
  return std::max({std::abs(oracle::bessel_j_mp(nu, w)), std::abs(oracle::bessel_j_mp(nu + 1.0, w)),
                   1e-300});
}

}  // namespace

TEST_CASE("values at the origin") {
  CHECK(bessel_j(0.0, 0.0) == cplx{1.0, 0.0});
  CHECK(bessel_j(2.0, 0.0) == cplx{0.0, 0.0});
  CHECK(bessel_j(-3.0, 0.0) == cplx{0.0, 0.0});
  CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(bessel_j(NAN, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(1.0, cplx{INFINITY, 0.0}), DomainError);
  CHECK_THROWS_AS(bessel_j(1.0, cplx{70.0, 0.0}), AccuracyError);
}

TEST_CASE("matches the 50-digit series") {
  CHECK(std::abs(bessel_j(1.5, 2.0) - oracle::bessel_j_mp(1.5, 2.0)) < 1e-12);
  // J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x)
  const double x = 2.0;
  CHECK(std::abs(bessel_j(1.5, x).real() - std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x))) < 1e-14);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double nu = -10.0 + 20.0 * u(rng);
    const cplx w = std::polar(0.01 + 39.99 * u(rng), kPi * (2.0 * u(rng) - 1.0));
    const cplx got = bessel_j(nu, w, 1e-6);
    worst = std::max(worst, std::abs(got - oracle::bessel_j_mp(nu, w)) / scale_at(nu, w));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("imaginary zero of the left-invisible order") {
  CHECK(std::abs(bessel_j(-1.0062, cplx{0.0, 0.157236})) < 1e-5);
}

TEST_CASE("conjugation and integer reflection") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double nu = -6.0 + 12.0 * u(rng);
    const cplx w = std::polar(0.1 + 25.0 * u(rng), kPi * (2.0 * u(rng) - 1.0) * 0.999);
    const cplx j = bessel_j(nu, w);
    CHECK(std::abs(bessel_j(nu, std::conj(w)) - std::conj(j)) <= 1e-12 * std::max(1.0, std::abs(j)));
    const int l = 1 + static_cast<int>(6 * u(rng));
    const cplx jl = bessel_j(l, w);
    const double sign = l % 2 ? -1.0 : 1.0;
    CHECK(std::abs(bessel_j(-l, w) - sign * jl) <= 1e-12 * std::max(1.0, std::abs(jl)));
  }
}

TEST_CASE("continuity across integer order") {
  const cplx w{3.1, -0.7};
  for (int n : {0, 1, 2, 3}) {
    const cplx at = bessel_j(n, w);
    CHECK(std::abs(bessel_j(n + 1e-9, w) - at) < 1e-8);
    CHECK(std::abs(bessel_j(n - 1e-9, w) - at) < 1e-8);
  }
}

TEST_CASE("derivative") {
  for (double x : {1e-3, 0.1, 0.7}) CHECK(std::abs(bessel_j_derivative(0.0, x) + bessel_j(1.0, x)) < 1e-12);
  const double h = 1e-5;
  const cplx fd = (bessel_j(1.0, 1.0 + h) - bessel_j(1.0, 1.0 - h)) / (2.0 * h);
  CHECK(std::abs(bessel_j_derivative(1.0, 1.0) - fd) < 1e-8);
  CHECK(bessel_j_derivative(0.0, 0.0) == cplx{0.0, 0.0});
  CHECK(bessel_j_derivative(1.0, 0.0) == cplx{0.5, 0.0});
  CHECK_THROWS_AS(bessel_j_derivative(2.0, 0.0), DomainError);

  const auto z = bessel::real_zeros(3.0062, 3);
  for (const auto& r : z) CHECK(std::abs(bessel_j_derivative(3.0062, r.location)) > 1e-3);

  const auto e = bessel::evaluate(0.3, {1.0, 1.0});
  CHECK(e.value == bessel_j(0.3, {1.0, 1.0}));
  CHECK(e.derivative == bessel_j_derivative(0.3, {1.0, 1.0}));
}

TEST_CASE("real zeros") {
  const auto z0 = bessel::real_zeros(0.0, 5);
  REQUIRE(z0.size() == 5);
  CHECK(std::abs(z0[0].location.real() - 2.404826) < 1e-6);
  CHECK(z0[0].kind == bessel::ZeroKind::real_axis);
  CHECK(z0[0].index == 1);
  CHECK(std::abs(z0[4].location.real() - 14.930917708487786) < 1e-9);

  // sign-change scan on the multiprecision series as the independent oracle
  auto j2 = [](double x) { return oracle::bessel_j_mp(2.0, x).real(); };
  double lo = 4.0, hi = 6.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (j2(lo) < 0) == (j2(mid) < 0) ? lo = mid : hi = mid;
  }
  CHECK(std::abs(bessel::real_zeros(2.0, 1)[0].location.real() - 0.5 * (lo + hi)) < 1e-10);

  for (double nu : {-0.7, 0.3, 2.5, 4.0, -1.5, -3.2}) {
    const auto zs = bessel::real_zeros(nu, 10);
    REQUIRE(zs.size() == 10);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      CHECK(std::abs(bessel_j(nu, zs[i].location)) <= bessel::kZeroTolerance);
      CHECK(std::abs(bessel_j_derivative(nu, zs[i].location)) > 1e-6);
      if (i) CHECK(zs[i].location.real() > zs[i - 1].location.real() + 1.0);
    }
  }
}

TEST_CASE("zeros of J_{v-1} are not zeros of J_{v+1}") {
  for (int i = -50; i <= 50; ++i) {
    if (i == 0) continue;
    const double nu = 0.1 * i;
    for (const auto& z : bessel::real_zeros(nu - 1.0, 10))
      CHECK(std::abs(bessel_j(nu + 1.0, z.location)) > 1e-6);
  }
}

TEST_CASE("Hurwitz band") {
  CHECK(bessel::in_hurwitz_band(-1.0062));
  CHECK(bessel::in_hurwitz_band(-1.5));
  CHECK(bessel::in_hurwitz_band(-3.2));
  CHECK_FALSE(bessel::in_hurwitz_band(0.5));
  CHECK_FALSE(bessel::in_hurwitz_band(-2.5));
  CHECK_FALSE(bessel::in_hurwitz_band(-1.0));
  CHECK_FALSE(bessel::in_hurwitz_band(-0.5));
}

TEST_CASE("imaginary zeros") {
  const auto p = bessel::imaginary_zeros(-1.0062);
  REQUIRE(p.has_value());
  CHECK(std::abs(p->first.location - cplx{0.0, 0.157236}) < 1e-5);
  CHECK(p->second.location == std::conj(p->first.location));
  CHECK(p->first.kind == bessel::ZeroKind::imaginary_axis);
  CHECK(std::abs(bessel_j_derivative(-1.0062, p->first.location)) > 1e-6);

  CHECK_FALSE(bessel::imaginary_zeros(0.5).has_value());
  CHECK_FALSE(bessel::imaginary_zeros(-2.5).has_value());

  // dense scan of |J_{-1.5}(iy)| on (0, 5] with the multiprecision series
  const auto q = bessel::imaginary_zeros(-1.5);
  REQUIRE(q.has_value());
  double best_y = 0.0, best = INFINITY;
  for (int i = 1; i <= 500; ++i) {
    const double y = 1e-2 * i;
    const double v = std::abs(oracle::bessel_j_mp(-1.5, cplx{0.0, y}));
    if (v < best) {
      best = v;
      best_y = y;
    }
  }
  CHECK(std::abs(q->first.location.imag() - best_y) < 1e-2);
  CHECK(std::abs(oracle::bessel_j_mp(-1.5, q->first.location)) < 1e-10);
}

TEST_CASE("identity residuals") {
  const auto r = bessel::identity_residuals(0.3, 1.7);
  CHECK(r.analytic_continuation < 1e-12);
  REQUIRE(r.cross_product.has_value());
  CHECK(*r.cross_product < 1e-12);
  CHECK(*r.shifted_cross_product < 1e-12);
  CHECK(r.recurrence < 1e-12);

  // half-integer order in closed form: J_{1/2}, J_{-1/2}, J_{3/2}, J_{-3/2}
  const double w = 2.0;
  const double c = std::sqrt(2.0 / (kPi * w));
  const double jp = c * std::sin(w), jm = c * std::cos(w);
  const double j32 = c * (std::sin(w) / w - std::cos(w));
  const double jm32 = c * (-std::cos(w) / w - std::sin(w));
  CHECK(std::abs(j32 * jm + jp * jm32 + 2.0 / (kPi * w)) < 1e-12);
  CHECK(*bessel::identity_residuals(0.5, w).cross_product < 1e-12);

  CHECK(bessel::identity_residuals(0.25, 1.3).analytic_continuation < 1e-12);
  CHECK(std::abs(bessel_j(0.25, std::polar(1.3, kPi)) - std::polar(1.0, 0.25 * kPi) * bessel_j(0.25, 1.3)) < 1e-12);
  CHECK_FALSE(bessel::identity_residuals(2.0, 1.0).cross_product.has_value());
  CHECK_THROWS_AS(bessel::identity_residuals(0.3, 0.0), DomainError);
}

TEST_CASE("recurrence over the working range") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double nu = -10.0 + 20.0 * u(rng);
    const cplx w = std::polar(1e-3 + 30.0 * u(rng), kPi * (2.0 * u(rng) - 1.0));
    const auto r = bessel::identity_residuals(nu, w);
    CHECK(r.recurrence <= 1e-10);
  }
}
