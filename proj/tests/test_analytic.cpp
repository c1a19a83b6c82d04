#include <doctest.h>

#include <cmath>
#include <random>

#include "scatter1d/analytic.hpp"
#include "scatter1d/bessel.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/transfer.hpp"

using namespace scatter1d;

namespace {

// k0 = 1 scaling: L = m pi, k = gamma, z = a^2
PotentialSpec spec_of(cplx a, int m) { return make_spec(a * a, m, m * kPi); }
WaveContext ctx_of(cplx a, int m, double gamma) { return wave_context(spec_of(a, m), gamma); }

ScatteringAmplitudes ode(cplx a, int m, double gamma) {
  return amplitudes_from_matrix(transfer_matrix(exponential_potential(spec_of(a, m)), gamma, 1e-12));
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("boundary values") {
  const cplx a{0.5, 0.0};
  const auto bv = boundary_values(ctx_of(a, 1, 0.7));
  const auto st = integrate_path(exponential_potential(spec_of(a, 1)), 0.7, 1e-12);
  CHECK(std::abs(bv.S0_L - st.S0) < 1e-8);
  CHECK(std::abs(bv.S1_L - st.S1) < 1e-8);

  // free: S1 stays 1, S0 is the bare phase e^{-2ikL}
  const auto free = boundary_values(ctx_of({0.0, 0.0}, 2, 0.7));
  CHECK(std::abs(free.S1_L - 1.0) < 1e-15);
  CHECK(std::abs(free.S0_L - std::exp(cplx{0.0, -2.0 * 0.7 * 2 * kPi})) < 1e-13);

  // mu = 0: kL in pi Z, gamma not an integer
  const auto z = boundary_values(ctx_of({0.4, 0.2}, 2, 1.5));
  CHECK(z.S0_L == cplx{1.0, 0.0});
  CHECK(z.S1_L == cplx{1.0, 0.0});

  // integer gamma against the ODE
  const auto bi = boundary_values(ctx_of({0.3, 0.1}, 3, 2.0));
  const auto si = integrate_path(exponential_potential(spec_of({0.3, 0.1}, 3)), 2.0, 1e-12);
  CHECK(std::abs(bi.S0_L - si.S0) < 1e-8);
  CHECK(std::abs(bi.S1_L - si.S1) < 1e-8);
}

TEST_CASE("mu = 0 gives bidirectional invisibility") {
  for (int m : {2, 3, 4}) {
    // gamma = j/m with j not a multiple of m
    for (int j = 1; j < 3 * m; ++j) {
      if (j % m == 0) continue;
      const auto amp = amplitudes_analytic(ctx_of({0.7, 0.3}, m, double(j) / m));
      CHECK(amp.T == cplx{1.0, 0.0});
      CHECK(amp.R_left == cplx{0.0, 0.0});
      CHECK(amp.R_right == cplx{0.0, 0.0});
    }
  }
}

TEST_CASE("closed form against the ODE") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int done = 0;
  while (done < 40) {
    const double g = 0.1 + 4.9 * u(rng);
    if (std::abs(g - std::round(g)) < 1e-3) continue;
    const int m = 1 + static_cast<int>(5 * u(rng));
    const cplx a = std::polar(2.0 * u(rng), kPi * (2.0 * u(rng) - 1.0));
    const auto ctx = ctx_of(a, m, g);
    if (std::abs(transmission_denominator(ctx)) < 1e-3) continue;
    const auto an = amplitudes_analytic(ctx);
    const auto nu = ode(a, m, g);
    CHECK(std::abs(an.T - nu.T) < 1e-7);
    CHECK(std::abs(an.R_left - nu.R_left) < 1e-7);
    CHECK(std::abs(an.R_right - nu.R_right) < 1e-7);
    ++done;
  }
  for (int n : {1, 2, 3}) {
    const cplx a{0.6, -0.4};
    const auto an = amplitudes_analytic(ctx_of(a, 2, n));
    const auto nu = ode(a, 2, n);
    CHECK(std::abs(an.T - nu.T) < 1e-7);
    CHECK(std::abs(an.R_left - nu.R_left) < 1e-7);
    CHECK(std::abs(an.R_right - nu.R_right) < 1e-7);
  }
}

TEST_CASE("conjugate potential in closed form") {
  for (double g : {0.7, 1.0, 2.3}) {
    const cplx a{0.5, 0.35};
    const auto spec = spec_of(a, 2);
    const auto ctx = wave_context(spec, g);
    const auto an = amplitudes_conjugate_analytic(ctx);
    const auto nu =
        amplitudes_from_matrix(transfer_matrix(conjugate_potential(exponential_potential(spec)), g, 1e-12));
    CHECK(std::abs(an.T - nu.T) < 1e-7);
    CHECK(std::abs(an.R_left - nu.R_left) < 1e-7);
    CHECK(std::abs(an.R_right - nu.R_right) < 1e-7);
    const auto direct = amplitudes_analytic(ctx);
    REQUIRE(direct.R_right_conj_potential.has_value());
    CHECK(std::abs(*direct.R_right_conj_potential - nu.R_right) < 1e-7);
  }
}

TEST_CASE("left-invisible design point") {
  const int m = 243;
  const double g = 2.0062;
  const auto amp = amplitudes_analytic(ctx_of({0.0, 0.157236}, m, g));
  CHECK(std::abs(amp.R_left) < 1e-5);
  CHECK(std::abs(amp.T - 1.0) < 1e-5);
  CHECK(std::abs(amp.R_right) > 1e-3);
}

TEST_CASE("transmission deficit") {
  const auto ctx = ctx_of({1e-4, 0.0}, 1, 1.0);
  const auto amp = amplitudes_analytic(ctx);
  const cplx d = transmission_deficit(ctx);
  CHECK(std::abs(d - (amp.T - 1.0)) < 1e-15);
  // weak coupling at n = 1: T - 1 ~ i pi m a^4 / (8 1! 2!) with no rounding floor
  CHECK(rel(d, kI * kPi * std::pow(1e-4, 4) / 16.0) < 1e-6);
}

TEST_CASE("perturbative leading terms") {
  const auto ctx = ctx_of({0.1, 0.0}, 1, 1.0);
  const auto lead = amplitudes_perturbative(ctx);
  CHECK(std::abs(lead.R_left - cplx{0.0, -0.015708}) < 1e-6);
  const auto exact = amplitudes_analytic(ctx);
  CHECK(rel(exact.R_left, lead.R_left) < 0.02);
  CHECK(rel(exact.T - 1.0, lead.T - 1.0) < 0.02);

  const auto free = amplitudes_perturbative(ctx_of({0.0, 0.0}, 1, 1.0));
  CHECK(free.T == cplx{1.0, 0.0});
  CHECK(free.R_left == cplx{0.0, 0.0});
  CHECK(free.R_right == cplx{0.0, 0.0});

  for (cplx a : {cplx{0.1, 0.0}, std::polar(0.1, 0.9)}) {
    const auto c = ctx_of(a, 3, 2.0);
    const auto e = amplitudes_analytic(c);
    const auto l = amplitudes_perturbative(c);
    CHECK(rel(e.R_left, l.R_left) < 0.05);
    CHECK(rel(e.R_right, l.R_right) < 0.05);
    CHECK(rel(transmission_deficit(c), l.T - 1.0) < 0.05);
  }
  CHECK_THROWS_AS(amplitudes_perturbative(ctx_of({0.1, 0.0}, 1, 1.5)), DomainError);
}

TEST_CASE("higher-order convergence of the leading terms") {
  // the relative error of the leading term is O(a^2)
  const auto err = [](double a) {
    const auto c = ctx_of({a, 0.0}, 2, 1.0);
    return rel(amplitudes_analytic(c).R_left, amplitudes_perturbative(c).R_left);
  };
  const double e1 = err(0.1), e2 = err(0.05);
  CHECK(e2 < e1);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("invisibility quality") {
  const auto q = invisibility_quality(ctx_of({0.1, 0.0}, 1, 1.0));
  CHECK(q.ratio_t == doctest::Approx(0.00125).epsilon(0.1));
  const auto q7 = invisibility_quality(ctx_of({0.1, 0.0}, 7, 1.0));
  CHECK(rel(q7.ratio_t, q.ratio_t) < 0.15);
  CHECK(rel(q7.ratio_rr, q.ratio_rr) < 0.15);
  const auto q3 = invisibility_quality(ctx_of({0.1, 0.0}, 1, 3.0));
  CHECK(q3.ratio_t < q.ratio_t);
  CHECK(q3.ratio_rr < q.ratio_rr);
  CHECK_THROWS_AS(invisibility_quality(ctx_of({0.1, 0.0}, 1, 1.3)), DomainError);
  CHECK_THROWS_AS(invisibility_quality(ctx_of({1e-9, 0.0}, 1, 2.0)), DegenerateError);
}

TEST_CASE("right reflection of the conjugate vanishes with the left reflection") {
  // J_{1-gamma}(a) = 0 gives R^l = 0 and R^r of v* = 0 together
  const double g = 0.4;
  const auto z = bessel::real_zeros(1.0 - g, 1);
  const auto amp = amplitudes_analytic(ctx_of(z[0].location, 1, g));
  CHECK(std::abs(amp.R_left) < 1e-9);
  REQUIRE(amp.R_right_conj_potential.has_value());
  CHECK(std::abs(*amp.R_right_conj_potential) < 1e-9);
}

TEST_CASE("integer limit is continuous") {
  const cplx a{0.6, 0.2};
  for (int n : {1, 2}) {
    const auto at = amplitudes_analytic(ctx_of(a, 3, n));
    const auto near = amplitudes_analytic(ctx_of(a, 3, n + 1e-6));
    CHECK(std::abs(at.T - near.T) < 1e-3);
    CHECK(std::abs(at.R_left - near.R_left) < 1e-3);
    CHECK(std::abs(at.R_right - near.R_right) < 1e-3);
  }
}

TEST_CASE("singular denominator is reported") {
  // integer-gamma spectral singularity, m = 100
  const auto ctx = ctx_of({0.174004434, 0.435309227}, 100, 1.0);
  CHECK(std::abs(transmission_denominator(ctx)) < 1e-6);
  CHECK_THROWS_AS(amplitudes_analytic(ctx, 1e-6), SpectralSingularityError);
}
