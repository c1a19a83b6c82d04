#include "scatter1d/transfer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "scatter1d/dopri5.hpp"
#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

thread_local IntegrationReport g_report;

void check_call(const SampledPotential& pot, double k, double tol) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("transfer: k must be positive");
  if (!(tol > 0.0) || tol > 1e-3) throw DomainError("transfer: tol must lie in (0, 1e-3]");
  if (!(pot.a_plus >= pot.a_minus) || !std::isfinite(pot.a_minus) || !std::isfinite(pot.a_plus))
    throw DomainError("transfer: support must be a finite interval");
  if (!pot.v) throw DomainError("transfer: potential has no evaluator");
}

ode::Options options_for(double k, double span, double tol) {
  ode::Options opt;
  opt.tol = tol;
  // keep the free phase e^{2ikx} under about one radian per step
  opt.h_max = std::min(span / 16.0, 1.0 / k);
  return opt;
}

}  // namespace

IntegrationReport last_integration_report() { return g_report; }

TransferMatrix transfer_matrix(const SampledPotential& pot, double k, double tol) {
  check_call(pot, k, tol);
  TransferMatrix M;
  M.k = k;
  const double span = pot.a_plus - pot.a_minus;
  if (span == 0.0) return M;

  const cplx inv_2ik = 1.0 / cplx{0.0, 2.0 * k};
  auto rhs = [&](double x, const std::array<cplx, 4>& u, std::array<cplx, 4>& du) {
    const cplx c = pot.v(x) * inv_2ik;
    const cplx e = std::polar(1.0, -2.0 * k * x);
    const cplx ec = std::conj(e);
    // rows of the generator applied to the columns (u0, u2) and (u1, u3)
    du[0] = c * (u[0] + e * u[2]);
    du[1] = c * (u[1] + e * u[3]);
    du[2] = -c * (ec * u[0] + u[2]);
    du[3] = -c * (ec * u[1] + u[3]);
  };
  ode::Stats stats;
  const std::array<cplx, 4> start{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  const auto u = ode::integrate<4>(rhs, pot.a_minus, pot.a_plus, start,
                                   options_for(k, span, tol), stats);
  g_report = {stats.accepted, stats.rejected};
  M.m11 = u[0];
  M.m12 = u[1];
  M.m21 = u[2];
  M.m22 = u[3];
  return M;
}

ScatteringAmplitudes amplitudes_from_matrix(const TransferMatrix& M, double singularity_eps) {
  const double mod = std::abs(M.m22);
  if (mod < singularity_eps)
    throw SpectralSingularityError("transfer: |M22| below the spectral-singularity threshold", mod);
  ScatteringAmplitudes amp;
  amp.T = 1.0 / M.m22;
  amp.R_right = M.m12 / M.m22;
  amp.R_left = -M.m21 / M.m22;
  return amp;
}

TransferMatrix matrix_from_amplitudes(const ScatteringAmplitudes& amp, double k) {
  if (amp.T == cplx{0.0, 0.0}) throw DomainError("transfer: T = 0 has no transfer matrix");
  TransferMatrix M;
  M.k = k;
  M.m22 = 1.0 / amp.T;
  M.m12 = amp.R_right / amp.T;
  M.m21 = -amp.R_left / amp.T;
  M.m11 = amp.T - amp.R_left * amp.R_right / amp.T;
  return M;
}

cplx left_reflection_via_conjugate(const SampledPotential& pot, double k, double tol) {
  const TransferMatrix M = transfer_matrix(pot, k, tol);
  const TransferMatrix Mc = transfer_matrix(conjugate_potential(pot), k, tol);
  if (M.m22 == cplx{0.0, 0.0} || Mc.m22 == cplx{0.0, 0.0})
    throw SpectralSingularityError("transfer: M22 vanishes", 0.0);
  const cplx T = 1.0 / M.m22;
  const cplx rr = M.m12 / M.m22;
  const cplx c = std::conj(Mc.m12 / Mc.m22);
  const cplx den = rr * c - 1.0;
  if (std::abs(den) < kConjugateDegeneracy)
    throw DegenerateError("transfer: R^r c - 1 vanishes; conjugate-potential route excluded");
  return T * T * c / den;
}

PathState integrate_path(const SampledPotential& pot, double k, double tol) {
  check_call(pot, k, tol);
  const cplx z_minus = std::polar(1.0, -2.0 * k * pot.a_minus);
  PathState out{z_minus, {1.0, 0.0}, {0.0, 0.0}, std::abs(z_minus), 1.0};
  const double span = pot.a_plus - pot.a_minus;
  if (span == 0.0) return out;

  const cplx two_ik{0.0, 2.0 * k};
  const cplx i_over_2k{0.0, 0.5 / k};
  auto rhs = [&](double x, const std::array<cplx, 3>& s, std::array<cplx, 3>& ds) {
    const cplx v = pot.v(x);
    const cplx z = std::polar(1.0, -2.0 * k * x);
    ds[0] = -two_ik * z * s[1];
    ds[1] = i_over_2k * v * std::conj(z) * s[0];
    ds[2] = -i_over_2k * v * std::conj(z) / (s[1] * s[1]);
  };
  auto observe = [&](double, const std::array<cplx, 3>& s) {
    out.min_abs_S0 = std::min(out.min_abs_S0, std::abs(s[0]));
    out.min_abs_S1 = std::min(out.min_abs_S1, std::abs(s[1]));
  };
  ode::Stats stats;
  const auto s = ode::integrate<3>(rhs, pot.a_minus, pot.a_plus, {out.S0, out.S1, out.left_integral},
                                   options_for(k, span, tol), stats, observe);
  g_report = {stats.accepted, stats.rejected};
  out.S0 = s[0];
  out.S1 = s[1];
  out.left_integral = s[2];
  return out;
}

cplx left_reflection_integral(const SampledPotential& pot, double k, double tol) {
  const PathState st = integrate_path(pot, k, tol);
  if (st.min_abs_S0 < kPathZeroEps || st.min_abs_S1 < kPathZeroEps)
    throw DegenerateError("transfer: path passes near a zero of S0 or S1; use the conjugate-potential route");
  return st.left_integral;
}

SampledPotential exponential_potential(const PotentialSpec& spec) {
  return {0.0, spec.length, [spec](double x) { return evaluate_potential(spec, x); }};
}

SampledPotential conjugate_potential(const SampledPotential& pot) {
  auto v = pot.v;
  return {pot.a_minus, pot.a_plus, [v](double x) { return std::conj(v(x)); }};
}

}  // namespace scatter1d
