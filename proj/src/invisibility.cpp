#include "scatter1d/invisibility.hpp"

#include <algorithm>
#include <cmath>

#include "scatter1d/analytic.hpp"
#include "scatter1d/errors.hpp"

namespace scatter1d {
namespace {

using nlohmann::json;

// |J_nu(a)| against the scale of its neighbours.
bool is_bessel_zero(double nu, cplx a, double eps, double& relative) {
  const double v = std::abs(bessel::bessel_j(nu, a));
  const double scale = std::max({std::abs(bessel::bessel_j(nu - 1.0, a)),
                                 std::abs(bessel::bessel_j(nu + 1.0, a)), 1e-300});
  relative = v / scale;
  return relative < eps;
}

bool kind_holds(VerdictKind kind, const Witnesses& w, double bound) {
  switch (kind) {
    case VerdictKind::bidirectional:
      return std::max({w.abs_R_left, w.abs_R_right, w.abs_T_minus_1}) < bound;
    case VerdictKind::left_only:
      return std::max(w.abs_R_left, w.abs_T_minus_1) < bound;
    case VerdictKind::right_only:
      return std::max(w.abs_R_right, w.abs_T_minus_1) < bound;
    case VerdictKind::visible:
      return true;
  }
  return true;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::bidirectional: return "bidirectional";
    case VerdictKind::left_only: return "left_only";
    case VerdictKind::right_only: return "right_only";
    case VerdictKind::visible: return "visible";
  }
  return "visible";
}

std::string to_string(Mechanism mech) {
  switch (mech) {
    case Mechanism::mu_zero: return "mu_zero";
    case Mechanism::bessel_zero_right: return "bessel_zero_right";
    case Mechanism::bessel_zero_left: return "bessel_zero_left";
    case Mechanism::none: return "none";
  }
  return "none";
}

VerdictKind mirror(VerdictKind kind) {
  if (kind == VerdictKind::left_only) return VerdictKind::right_only;
  if (kind == VerdictKind::right_only) return VerdictKind::left_only;
  return kind;
}

Witnesses witnesses_of(const ScatteringAmplitudes& amp) {
  return {std::abs(amp.R_left), std::abs(amp.R_right), std::abs(amp.T - 1.0)};
}

VerdictKind verdict_from_witnesses(const Witnesses& w, double eps) {
  const bool t_one = w.abs_T_minus_1 < eps;
  const bool left = w.abs_R_left < eps;
  const bool right = w.abs_R_right < eps;
  if (t_one && left && right) return VerdictKind::bidirectional;
  if (t_one && left) return VerdictKind::left_only;
  if (t_one && right) return VerdictKind::right_only;
  return VerdictKind::visible;
}

InvisibilityVerdict classify(const WaveContext& ctx, double eps) {
  if (ctx.a_frak == cplx{0.0, 0.0}) throw DomainError("classify: coupling must be nonzero");
  InvisibilityVerdict out;
  const ScatteringAmplitudes amp = amplitudes_analytic(ctx);
  out.witnesses = witnesses_of(amp);
  out.witnesses.abs_T_minus_1 = std::abs(transmission_deficit(ctx));
  out.kind = verdict_from_witnesses(out.witnesses, eps);

  double rel_right = 0.0, rel_left = 0.0;
  const double g = ctx.gamma_is_integer ? ctx.integer_gamma : ctx.gamma;
  if (ctx.mu_vanishes) {
    out.mechanism = Mechanism::mu_zero;
    out.predicted = VerdictKind::bidirectional;
  } else {
    const bool right = is_bessel_zero(g + 1.0, ctx.a_frak, eps, rel_right);
    const bool left = is_bessel_zero(1.0 - g, ctx.a_frak, eps, rel_left);
    if (right && left) {
      // a common zero of J_{gamma+1} and J_{1-gamma}
      out.mechanism = Mechanism::bessel_zero_right;
      out.predicted = VerdictKind::bidirectional;
    } else if (right) {
      out.mechanism = Mechanism::bessel_zero_right;
      out.predicted = VerdictKind::right_only;
    } else if (left) {
      out.mechanism = Mechanism::bessel_zero_left;
      out.predicted = VerdictKind::left_only;
    }
  }

  bool consistent = true;
  if (out.predicted != VerdictKind::visible) {
    consistent = kind_holds(out.predicted, out.witnesses, 10.0 * eps);
  } else if (out.kind != VerdictKind::visible) {
    // invisible witnesses without a mechanism
    consistent = !kind_holds(out.kind, out.witnesses, 0.1 * eps);
  }
  if (!consistent) {
    out.inconsistency = json{
        {"gamma", g},
        {"m", ctx.m},
        {"a", cplx_json(ctx.a_frak)},
        {"mu", cplx_json(ctx.mu)},
        {"predicted", to_string(out.predicted)},
        {"observed", to_string(out.kind)},
        {"J_gamma_plus_1_relative", rel_right},
        {"J_1_minus_gamma_relative", rel_left},
        {"abs_R_left", out.witnesses.abs_R_left},
        {"abs_R_right", out.witnesses.abs_R_right},
        {"abs_T_minus_1", out.witnesses.abs_T_minus_1},
    };
  }
  return out;
}

InvisibilityVerdict classify_amplitudes(const ScatteringAmplitudes& amp, double eps) {
  InvisibilityVerdict out;
  out.witnesses = witnesses_of(amp);
  out.kind = verdict_from_witnesses(out.witnesses, eps);
  out.predicted = out.kind;
  return out;
}

Design design_unidirectional(double gamma, Side side, ZeroSelector selector) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("design: gamma must be positive");
  Design d{gamma, side, side == Side::right ? gamma + 1.0 : 1.0 - gamma, {}, {}};
  if (selector.axis == ZeroSelector::Axis::imaginary_pair) {
    const auto pair = bessel::imaginary_zeros(d.order);
    if (!pair)
      throw NoSolutionError("design: J_" + std::to_string(d.order) +
                            " has no purely imaginary zeros (order outside the Hurwitz band)");
    d.a_frak = pair->first.location;
  } else {
    if (selector.index < 1) throw DomainError("design: zero index is 1-based");
    const auto zeros = bessel::real_zeros(d.order, selector.index);
    d.a_frak = zeros.back().location;
  }
  d.eps0 = 1.0 - d.a_frak * d.a_frak / (gamma * gamma);
  // a on either axis makes a^2 real
  d.eps0.imag(0.0);
  return d;
}

double design_wavelength(double gamma, int m, double length) { return 2.0 * length / (gamma * m); }

SweepConfig left_invisible_slab(double gamma, int m, double length_um, double lambda_min_nm,
                                double lambda_max_nm, int samples) {
  const Design d = design_unidirectional(gamma, Side::left, ZeroSelector::imaginary_pair());
  SweepConfig cfg;
  cfg.mode = SweepConfig::Mode::fixed_permittivity;
  cfg.eps0 = d.eps0;
  cfg.m = m;
  cfg.length_um = length_um;
  cfg.lambda_min_nm = lambda_min_nm;
  cfg.lambda_max_nm = lambda_max_nm;
  cfg.samples = samples;
  cfg.pinned_nm = {design_wavelength(gamma, m, length_um) * 1e3};
  return cfg;
}

std::vector<SweepRow> wavelength_sweep(const SweepConfig& cfg, Execution exec) {
  if (cfg.samples < 1) throw DomainError("sweep: at least one sample required");
  if (!(cfg.lambda_min_nm > 0.0) || !(cfg.lambda_max_nm >= cfg.lambda_min_nm))
    throw DomainError("sweep: wavelength range must be positive and ordered");
  const PotentialSpec base = make_spec(cfg.coupling, cfg.m, cfg.length_um);

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(cfg.samples) + cfg.pinned_nm.size());
  if (cfg.samples == 1) {
    grid.push_back(cfg.lambda_min_nm);
  } else {
    const double step = (cfg.lambda_max_nm - cfg.lambda_min_nm) / (cfg.samples - 1);
    for (int i = 0; i < cfg.samples; ++i)
      grid.push_back(i + 1 == cfg.samples ? cfg.lambda_max_nm : cfg.lambda_min_nm + i * step);
  }
  for (double p : cfg.pinned_nm)
    if (p >= cfg.lambda_min_nm && p <= cfg.lambda_max_nm) grid.push_back(p);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<SweepRow> rows(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t i) {
    const double lambda_nm = grid[i];
    const double k = 2.0 * kPi / (lambda_nm * 1e-3);
    PotentialSpec spec = base;
    if (cfg.mode == SweepConfig::Mode::fixed_permittivity) spec = from_permittivity(cfg.eps0, k, cfg.m, cfg.length_um);
    const WaveContext ctx = wave_context(spec, k);
    ScatteringAmplitudes amp;
    try {
      amp = amplitudes_analytic(ctx);
    } catch (const SpectralSingularityError& e) {
      throw SpectralSingularityError("sweep: spectral singularity at lambda = " +
                                         std::to_string(lambda_nm) + " nm",
                                     e.modulus());
    }
    rows[i] = {lambda_nm, std::abs(amp.R_left), std::abs(amp.R_right),
               std::abs(transmission_deficit(ctx))};
  });
  return rows;
}

}  // namespace scatter1d
