#include <doctest.h>

#include <cmath>

#include "scatter1d/errors.hpp"
#include "scatter1d/potential.hpp"

using namespace scatter1d;

namespace {

// direct evaluation of (1 - e^{2 pi i m gamma}) / (2 i sin(pi gamma))
cplx mu_naive(double gamma, int m) {
  return (1.0 - std::exp(cplx{0.0, 2.0 * kPi * m * gamma})) / (2.0 * kI * std::sin(kPi * gamma));
}

}  // namespace

TEST_CASE("potential argument checks") {
  CHECK_THROWS_AS(make_spec({1.0, 0.0}, 0, 1.0), DomainError);
  CHECK_THROWS_AS(make_spec({1.0, 0.0}, 2, 0.0), DomainError);
  CHECK_THROWS_AS(make_spec({1.0, 0.0}, 2, -3.0), DomainError);
  CHECK_THROWS_AS(make_spec({NAN, 0.0}, 2, 1.0), DomainError);
  const auto s = make_spec({0.5, 0.1}, 3, 2.0);
  CHECK(s.k0() == doctest::Approx(1.5 * kPi));
}

TEST_CASE("interference factor") {
  CHECK(std::abs(interference_factor(0.5, 2)) == 0.0);
  CHECK(interference_factor(1.0, 7) == cplx{7.0, 0.0});
  CHECK(interference_factor(2.0, 7) == cplx{-7.0, 0.0});
  CHECK(interference_factor(3.0, 4) == cplx{4.0, 0.0});
  CHECK(std::abs(interference_factor(1.5, 3) - mu_naive(1.5, 3)) < 1e-12);
  CHECK(std::abs(interference_factor(0.37, 5) - mu_naive(0.37, 5)) < 1e-12);
  CHECK(std::abs(interference_factor(2.0062, 243) - mu_naive(2.0062, 243)) < 1e-9);

  // continuous into the integer limit
  for (int n : {1, 2, 3}) {
    for (int m : {1, 4, 9}) {
      const cplx lim = interference_factor(n, m);
      CHECK(std::abs(interference_factor(n + 1e-6, m) - lim) < 1e-3 * m);
      CHECK(std::abs(interference_factor(n - 1e-6, m) - lim) < 1e-3 * m);
    }
  }
}

TEST_CASE("wave context") {
  const auto spec = make_spec({0.0, 0.0}, 243, 260.0);
  const double gamma = 2.0062;
  const auto ctx = wave_context(spec, gamma * spec.k0());
  CHECK(std::abs(ctx.kL - 1531.547) < 1e-3);
  CHECK(ctx.gamma == doctest::Approx(gamma));
  CHECK_FALSE(ctx.gamma_is_integer);
  CHECK(ctx.a_frak == cplx{0.0, 0.0});

  const auto half = wave_context(make_spec({0.3, 0.0}, 2, 1.0), 0.5 * 2.0 * kPi);
  CHECK(half.mu_vanishes);
  CHECK(std::abs(half.mu) == 0.0);

  const auto one = wave_context(make_spec({0.3, 0.0}, 5, 1.0), 5.0 * kPi);
  CHECK(one.gamma_is_integer);
  CHECK(one.integer_gamma == 1);
  CHECK(one.mu == cplx{5.0, 0.0});
  CHECK_FALSE(one.mu_vanishes);

  CHECK_THROWS_AS(wave_context(spec, -1.0), DomainError);
  CHECK_THROWS_AS(wave_context(spec, 0.0), DomainError);
}

TEST_CASE("potential values") {
  const cplx z{0.4, -0.2};
  const auto spec = make_spec(z, 3, 2.0);
  const double L = spec.length;
  CHECK(std::abs(evaluate_potential(spec, 0.0) - z) < 1e-15);
  CHECK(std::abs(evaluate_potential(spec, L / 3.0) - z) < 1e-14);
  CHECK(std::abs(evaluate_potential(spec, L / 12.0) - (-kI * z)) < 1e-14);
  CHECK(evaluate_potential(spec, -1e-3) == cplx{0.0, 0.0});
  CHECK(evaluate_potential(spec, L + 1e-3) == cplx{0.0, 0.0});
}

TEST_CASE("principal sqrt") {
  CHECK(principal_sqrt({-4.0, 0.0}) == cplx{0.0, 2.0});
  CHECK(principal_sqrt({-4.0, -0.0}) == cplx{0.0, 2.0});
  CHECK(std::abs(principal_sqrt({0.0, 2.0}) - cplx{1.0, 1.0}) < 1e-15);
  CHECK(principal_sqrt({0.0, -2.0}).real() > 0.0);
}

TEST_CASE("permittivity round trip") {
  const double L = 260.0;
  const int m = 243;
  const double gamma = 1.0;
  const double k = gamma * m * kPi / L;
  const cplx eps0{1.159216580, -0.151491471};
  const auto spec = from_permittivity(eps0, k, m, L);
  CHECK(std::abs(spec.coupling - k * k * (1.0 - eps0)) < 1e-14);
  const auto prof = permittivity(spec, k);
  CHECK(std::abs(prof.eps0 - eps0) < 1e-12);
  CHECK(std::abs(prof.at(0.0) - eps0) < 1e-12);
  CHECK(prof.at(-1.0) == cplx{1.0, 0.0});
  CHECK(prof.at(L + 1.0) == cplx{1.0, 0.0});

  // a = i gamma sqrt(eps0 - 1)
  for (cplx e : {cplx{1.006142616812, 0.0}, cplx{1.159216580, -0.151491471}, cplx{2.5, 0.3}}) {
    for (double g : {0.4, 1.0, 2.0062}) {
      const double kk = g * m * kPi / L;
      const auto ctx = wave_context(from_permittivity(e, kk, m, L), kk);
      const cplx expect = kI * g * std::sqrt(e - 1.0);
      // both branches are admissible; compare up to sign
      CHECK(std::min(std::abs(ctx.a_frak - expect), std::abs(ctx.a_frak + expect)) < 1e-12);
    }
  }

  // design point: eps0 = 1.006142616812 at gamma = 2.0062 gives a = 0.157236 i
  {
    const double g = 2.0062;
    const double kk = g * m * kPi / L;
    const auto ctx = wave_context(from_permittivity({1.006142616812, 0.0}, kk, m, L), kk);
    CHECK(std::abs(ctx.a_frak - cplx{0.0, 0.157236}) < 1e-6);
  }
}

TEST_CASE("permittivity rejects bad input") {
  CHECK_THROWS_AS(from_permittivity({NAN, 0.0}, 1.0, 2, 1.0), DomainError);
  CHECK_THROWS_AS(from_permittivity({2.0, 0.0}, -1.0, 2, 1.0), DomainError);
}
