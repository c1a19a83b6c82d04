#include "scatter1d/analytic.hpp"

#include <cmath>

#include "scatter1d/bessel.hpp"
#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

using bessel::bessel_j;

bool free_space(const WaveContext& ctx) { return ctx.a_frak == cplx{0.0, 0.0}; }

double factorial(int n) { return std::tgamma(n + 1.0); }

void require_integer(const WaveContext& ctx) {
  if (!ctx.gamma_is_integer || ctx.integer_gamma < 1)
    throw DomainError("analytic: integer gamma required");
}

// den, and the conjugate-potential denominator, plus the products they share
struct Products {
  cplx den;
  cplx cden;   // conj of the v* denominator
  cplx rr;     // R^r
  cplx c;      // conj(R^r of v*)
};

Products products(const WaveContext& ctx) {
  const cplx a = ctx.a_frak;
  const cplx a2 = a * a;
  const cplx ipi = kI * kPi;
  if (ctx.gamma_is_integer) {
    const int n = ctx.integer_gamma;
    const double m = ctx.m;
    const cplx jm = bessel_j(n - 1, a);
    const cplx jp = bessel_j(n + 1, a);
    Products p;
    p.den = 2.0 * n - ipi * m * a2 * jm * jp;
    p.cden = 2.0 * n + ipi * m * a2 * jm * jp;
    p.rr = -ipi * m * a2 * jp * jp / p.den;
    p.c = ipi * m * a2 * jm * jm / p.cden;
    return p;
  }
  const double g = ctx.gamma;
  const cplx mu = ctx.mu;
  const cplx j1mg = bessel_j(1.0 - g, a);
  const cplx jgp1 = bessel_j(g + 1.0, a);
  const cplx jmgm1 = bessel_j(-g - 1.0, a);
  const cplx jgm1 = bessel_j(g - 1.0, a);
  Products p;
  p.den = 2.0 * g - ipi * a2 * mu * j1mg * jgp1;
  p.cden = 2.0 * g + ipi * a2 * std::conj(mu) * j1mg * jgp1;
  p.rr = -ipi * a2 * std::conj(mu) * jmgm1 * jgp1 / p.den;
  p.c = ipi * a2 * mu * j1mg * jgm1 / p.cden;
  return p;
}

}  // namespace

BoundaryValues boundary_values(const WaveContext& ctx) {
  if (free_space(ctx)) return {std::polar(1.0, -2.0 * ctx.kL), {1.0, 0.0}};
  if (ctx.mu_vanishes) return {{1.0, 0.0}, {1.0, 0.0}};
  const cplx a = ctx.a_frak;
  const cplx ipi = kI * kPi;
  if (ctx.gamma_is_integer) {
    const int n = ctx.integer_gamma;
    const double m = ctx.m;
    return {1.0 - ipi * m * a * bessel_j(n, a) * bessel_j(n + 1, a),
            1.0 - ipi * m * a * a * bessel_j(n + 1, a) * bessel_j(n - 1, a) / (2.0 * n)};
  }
  const double g = ctx.gamma;
  return {1.0 - ipi * a * std::conj(ctx.mu) * bessel_j(g, a) * bessel_j(-g - 1.0, a),
          1.0 - ipi * a * a * ctx.mu / (2.0 * g) * bessel_j(g + 1.0, a) * bessel_j(1.0 - g, a)};
}

cplx transmission_denominator(const WaveContext& ctx) {
  const double two_g = ctx.gamma_is_integer ? 2.0 * ctx.integer_gamma : 2.0 * ctx.gamma;
  if (free_space(ctx) || ctx.mu_vanishes) return two_g;
  return products(ctx).den;
}

ScatteringAmplitudes amplitudes_analytic(const WaveContext& ctx, double singularity_eps) {
  ScatteringAmplitudes amp{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, cplx{0.0, 0.0}};
  if (free_space(ctx) || ctx.mu_vanishes) return amp;
  const Products p = products(ctx);
  const double mod = std::abs(p.den);
  if (mod < singularity_eps)
    throw SpectralSingularityError("analytic: transmission denominator vanishes", mod);
  const double two_g = ctx.gamma_is_integer ? 2.0 * ctx.integer_gamma : 2.0 * ctx.gamma;
  amp.T = two_g / p.den;
  amp.R_right = p.rr;
  amp.R_right_conj_potential = std::conj(p.c);
  if (ctx.gamma_is_integer) {
    const int n = ctx.integer_gamma;
    const cplx a = ctx.a_frak;
    const cplx jm = bessel_j(n - 1, a);
    amp.R_left = -kI * kPi * static_cast<double>(ctx.m) * a * a * jm * jm / p.den;
  } else {
    const cplx q = p.rr * p.c - 1.0;
    if (std::abs(q) < kConjugateDegeneracy)
      throw DegenerateError("analytic: R^r c - 1 vanishes");
    amp.R_left = amp.T * amp.T * p.c / q;
  }
  return amp;
}

ScatteringAmplitudes amplitudes_conjugate_analytic(const WaveContext& ctx, double singularity_eps) {
  ScatteringAmplitudes amp{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, cplx{0.0, 0.0}};
  if (free_space(ctx) || ctx.mu_vanishes) return amp;
  const Products p = products(ctx);
  const double mod = std::abs(p.cden);
  if (mod < singularity_eps)
    throw SpectralSingularityError("analytic: conjugate-potential denominator vanishes", mod);
  const double two_g = ctx.gamma_is_integer ? 2.0 * ctx.integer_gamma : 2.0 * ctx.gamma;
  amp.T = std::conj(two_g / p.cden);
  amp.R_right = std::conj(p.c);
  amp.R_right_conj_potential = p.rr;
  const cplx rr_conj = std::conj(p.rr);
  const cplx q = amp.R_right * rr_conj - 1.0;
  if (std::abs(q) < kConjugateDegeneracy)
    throw DegenerateError("analytic: conjugate-potential relation degenerate");
  amp.R_left = amp.T * amp.T * rr_conj / q;
  return amp;
}

cplx transmission_deficit(const WaveContext& ctx) {
  if (free_space(ctx) || ctx.mu_vanishes) return {0.0, 0.0};
  const double two_g = ctx.gamma_is_integer ? 2.0 * ctx.integer_gamma : 2.0 * ctx.gamma;
  const cplx den = products(ctx).den;
  return (two_g - den) / den;
}

ScatteringAmplitudes amplitudes_perturbative(const WaveContext& ctx) {
  require_integer(ctx);
  const int n = ctx.integer_gamma;
  const double m = ctx.m;
  const cplx a2 = ctx.a_frak * ctx.a_frak;
  const cplx ipim = kI * kPi * m;
  ScatteringAmplitudes amp;
  amp.R_right = -ipim * std::pow(a2, n + 2) /
                (std::ldexp(1.0, 2 * n + 3) * n * factorial(n + 1) * factorial(n + 1));
  amp.T = 1.0 + ipim * std::pow(a2, n + 1) / (std::ldexp(1.0, 2 * n + 1) * factorial(n) * factorial(n + 1));
  amp.R_left = -ipim * std::pow(a2, n) /
               (std::ldexp(1.0, 2 * n - 1) * n * factorial(n - 1) * factorial(n - 1));
  return amp;
}

QualityRatios invisibility_quality(const WaveContext& ctx) {
  require_integer(ctx);
  const ScatteringAmplitudes amp = amplitudes_analytic(ctx);
  const double rl = std::abs(amp.R_left);
  if (rl < kQualityDegeneracy) throw DegenerateError("analytic: R^l vanishes, ratios undefined");
  return {std::abs(amp.R_right) / rl, std::abs(transmission_deficit(ctx)) / rl};
}

}  // namespace scatter1d
