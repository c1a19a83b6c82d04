#include "scatter1d/potential.hpp"

#include <cmath>

#include "scatter1d/errors.hpp"

namespace scatter1d {

PotentialSpec make_spec(cplx coupling, int m, double length) {
  if (m < 1) throw DomainError("potential: m must be a positive integer");
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("potential: L must be positive");
  if (!std::isfinite(coupling.real()) || !std::isfinite(coupling.imag()))
    throw DomainError("potential: coupling must be finite");
  return {coupling, m, length};
}

cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0) {
    if (z.real() < 0.0) return {0.0, std::sqrt(-z.real())};
    return {std::sqrt(z.real()), 0.0};
  }
  return std::sqrt(z);
}

cplx interference_factor(double gamma, int m, double integer_snap_eps) {
  const double n = std::nearbyint(gamma);
  const double delta = gamma - n;
  if (std::abs(delta) < integer_snap_eps) {
    const bool even = std::fmod(std::abs(n), 2.0) == 0.0;
    return even ? cplx{-static_cast<double>(m), 0.0} : cplx{static_cast<double>(m), 0.0};
  }
  // e^{2 pi i m gamma} = e^{2 pi i f} with f the offset of m*delta to the
  // nearest integer.
  const double md = m * delta;
  const double f = md - std::nearbyint(md);
  if (std::abs(f) < integer_snap_eps) return {0.0, 0.0};
  const double theta = 2.0 * kPi * f;
  const double s = std::sin(0.5 * theta);
  const cplx numerator{2.0 * s * s, -std::sin(theta)};  // 1 - e^{i theta}
  const double sign = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
  const double sin_pi_gamma = sign * std::sin(kPi * delta);
  return numerator / cplx{0.0, 2.0 * sin_pi_gamma};
}

WaveContext wave_context(const PotentialSpec& spec, double k, double integer_snap_eps) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wave_context: k must be positive");
  WaveContext ctx;
  ctx.k = k;
  ctx.m = spec.m;
  ctx.kL = k * spec.length;
  ctx.gamma = k / spec.k0();
  ctx.a_frak = principal_sqrt(spec.coupling) / spec.k0();
  const double n = std::nearbyint(ctx.gamma);
  ctx.gamma_is_integer = std::abs(ctx.gamma - n) < integer_snap_eps;
  ctx.integer_gamma = ctx.gamma_is_integer ? static_cast<int>(n) : 0;
  ctx.mu = interference_factor(ctx.gamma, spec.m, integer_snap_eps);
  ctx.mu_vanishes = !ctx.gamma_is_integer && ctx.mu == cplx{0.0, 0.0};
  return ctx;
}

cplx evaluate_potential(const PotentialSpec& spec, double x) {
  if (x < 0.0 || x > spec.length) return {0.0, 0.0};
  return spec.coupling * std::polar(1.0, -2.0 * spec.k0() * x);
}

cplx PermittivityProfile::at(double x) const {
  if (x < 0.0 || x > length) return {1.0, 0.0};
  return 1.0 + (eps0 - 1.0) * std::polar(1.0, -2.0 * k0 * x);
}

PermittivityProfile permittivity(const PotentialSpec& spec, double k) {
  if (!(k > 0.0)) throw DomainError("permittivity: k must be positive");
  return {1.0 - spec.coupling / (k * k), spec.k0(), spec.length};
}

PotentialSpec from_permittivity(cplx eps0, double k, int m, double length) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("from_permittivity: k must be positive");
  return make_spec(k * k * (1.0 - eps0), m, length);
}

}  // namespace scatter1d
