#include "scatter1d/validation.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>

#include "scatter1d/analytic.hpp"
#include "scatter1d/bessel.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/invisibility.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {
namespace {

// max (or min) of per-sample values, filled by index so the result does not
// depend on scheduling
struct Ensemble {
  std::vector<double> values;
  std::vector<char> used;

  explicit Ensemble(std::size_t n) : values(n, 0.0), used(n, 0) {}
  void set(std::size_t i, double v) {
    values[i] = v;
    used[i] = 1;
  }
  int count() const { return static_cast<int>(std::count(used.begin(), used.end(), 1)); }
  double max() const {
    double w = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (used[i]) w = std::max(w, std::isnan(values[i]) ? INFINITY : values[i]);
    return w;
  }
  double min() const {
    double w = INFINITY;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (used[i]) w = std::min(w, std::isnan(values[i]) ? -INFINITY : values[i]);
    return w;
  }
};

PropertyResult upper(std::string name, const Ensemble& e, double bound, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = e.max();
  r.bound = bound;
  r.samples = e.count();
  r.passed = r.samples > 0 && r.worst < bound;
  r.detail = std::move(detail);
  return r;
}

PropertyResult lower(std::string name, const Ensemble& e, double bound, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = e.min();
  r.bound = bound;
  r.worst_is_minimum = true;
  r.samples = e.count();
  r.passed = r.samples > 0 && r.worst > bound;
  r.detail = std::move(detail);
  return r;
}

PotentialSpec unit_spec(const RandomConfig& c) {
  const cplx a{c.a_re, c.a_im};
  return make_spec(a * a, c.m, c.m * kPi);
}

double amp_distance(const ScatteringAmplitudes& x, const ScatteringAmplitudes& y) {
  return std::max({std::abs(x.R_left - y.R_left), std::abs(x.R_right - y.R_right),
                   std::abs(x.T - y.T)});
}

double max_witness(const ScatteringAmplitudes& amp) {
  return std::max({std::abs(amp.R_left), std::abs(amp.R_right), std::abs(amp.T - 1.0)});
}

WaveContext unit_context(int m, double gamma, cplx a) {
  return wave_context(make_spec(a * a, m, m * kPi), gamma);
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return !p.asserted || p.passed; });
}

Suite parse_suite(const std::string& name) {
  if (name == "bessel") return Suite::bessel;
  if (name == "transfer") return Suite::transfer;
  if (name == "analytic") return Suite::analytic;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + name + "' (expected bessel, transfer, analytic or all)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::bessel: return "bessel";
    case Suite::transfer: return "transfer";
    case Suite::analytic: return "analytic";
    case Suite::all: return "all";
  }
  return "all";
}

std::vector<RandomConfig> random_ensemble(std::uint64_t seed, int count, int m_max, double a_max,
                                          double gamma_min, double gamma_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RandomConfig> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int m = 1 + static_cast<int>(unit(rng) * m_max) % m_max;
    const double gamma = gamma_min + (gamma_max - gamma_min) * unit(rng);
    const double r = a_max * unit(rng);
    const double th = 2.0 * kPi * unit(rng);
    out.push_back({m, gamma, r * std::cos(th), r * std::sin(th)});
  }
  return out;
}

SuiteReport validate_bessel(std::uint64_t seed, Execution exec) {
  SuiteReport rep{"bessel", seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  struct Point {
    double nu;
    cplx w;
  };
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) {
    double nu = -5.0 + 10.0 * unit(rng);
    if (std::abs(nu - std::nearbyint(nu)) < 1e-3) nu += 0.01;
    pts.push_back({nu, std::polar(0.05 + 19.95 * unit(rng), kPi * (2.0 * unit(rng) - 1.0))});
  }
  Ensemble cross(pts.size()), shifted(pts.size()), recur(pts.size()), cont(pts.size()),
      deriv(pts.size());
  for_each_index(pts.size(), exec, [&](std::size_t i) {
    const auto r = bessel::identity_residuals(pts[i].nu, pts[i].w);
    cross.set(i, r.cross_product.value_or(0.0));
    shifted.set(i, r.shifted_cross_product.value_or(0.0));
    recur.set(i, r.recurrence);
    cont.set(i, r.analytic_continuation);
    const double h = 1e-5;
    const cplx fd = (bessel::bessel_j(pts[i].nu, pts[i].w + h) - bessel::bessel_j(pts[i].nu, pts[i].w - h)) / (2.0 * h);
    const cplx d = bessel::bessel_j_derivative(pts[i].nu, pts[i].w);
    deriv.set(i, std::abs(fd - d) / std::max(1.0, std::abs(d)));
  });
  rep.properties.push_back(upper("cross-product identity J_{v+1}J_{-v} + J_v J_{-v-1}", cross, 1e-10));
  rep.properties.push_back(upper("shifted cross-product identity J_{v+1}J_{1-v} - J_{v-1}J_{-v-1}", shifted, 1e-10));
  rep.properties.push_back(upper("three-term recurrence", recur, 1e-10));
  rep.properties.push_back(upper("analytic continuation across the cut", cont, 1e-10));
  rep.properties.push_back(upper("derivative vs central difference", deriv, 1e-6));

  // J_{v+1} stays away from zero at the zeros of J_{v-1}; v = 0 is excluded
  // because J_{-1} = -J_1
  std::vector<double> grid;
  for (int i = -50; i <= 50; ++i)
    if (i != 0) grid.push_back(0.1 * i);
  Ensemble sep(grid.size()), zero_res(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t i) {
    const double nu = grid[i];
    double smallest = INFINITY, worst = 0.0;
    for (const auto& z : bessel::real_zeros(nu - 1.0, 10)) {
      smallest = std::min(smallest, std::abs(bessel::bessel_j(nu + 1.0, z.location)));
      worst = std::max(worst, std::abs(bessel::bessel_j(nu - 1.0, z.location)));
    }
    sep.set(i, smallest);
    zero_res.set(i, worst);
  });
  rep.properties.push_back(upper("refined real zeros |J|", zero_res, 1e-10));
  rep.properties.push_back(lower("separation |J_{v+1}| at zeros of J_{v-1}", sep, 1e-6));

  // imaginary pair exactly inside the band
  std::vector<double> band_grid;
  for (int i = 1; i < 90; ++i) band_grid.push_back(-0.1 * i - 0.0311);
  Ensemble band(band_grid.size());
  for_each_index(band_grid.size(), exec, [&](std::size_t i) {
    const double nu = band_grid[i];
    const auto pair = bessel::imaginary_zeros(nu);
    double bad = 0.0;
    if (pair.has_value() != bessel::in_hurwitz_band(nu)) bad = 1.0;
    if (pair) {
      const double v = std::abs(bessel::bessel_j(nu, pair->first.location)) +
                       std::abs(bessel::bessel_j(nu, pair->second.location));
      bad = std::max(bad, v);
    }
    band.set(i, bad);
  });
  rep.properties.push_back(upper("imaginary zero pair iff order in the Hurwitz band", band, 1e-10));
  return rep;
}

SuiteReport validate_transfer(std::uint64_t seed, Execution exec) {
  SuiteReport rep{"transfer", seed, {}};
  const auto cfgs = random_ensemble(seed, 120, 5, 2.0, 0.1, 5.0);
  Ensemble det(cfgs.size()), oracle(cfgs.size()), recon(cfgs.size());
  for_each_index(cfgs.size(), exec, [&](std::size_t i) {
    const RandomConfig& c = cfgs[i];
    const PotentialSpec spec = unit_spec(c);
    const TransferMatrix M = transfer_matrix(exponential_potential(spec), c.gamma, 1e-10);
    det.set(i, std::abs(M.det() - 1.0));
    try {
      const ScatteringAmplitudes num = amplitudes_from_matrix(M);
      const ScatteringAmplitudes an = amplitudes_analytic(wave_context(spec, c.gamma));
      oracle.set(i, amp_distance(num, an));
      const TransferMatrix back = matrix_from_amplitudes(num, c.gamma);
      const double scale = std::max({1.0, std::abs(M.m11), std::abs(M.m12), std::abs(M.m21), std::abs(M.m22)});
      recon.set(i, std::max({std::abs(back.m11 - M.m11), std::abs(back.m12 - M.m12),
                             std::abs(back.m21 - M.m21), std::abs(back.m22 - M.m22)}) / scale);
    } catch (const SpectralSingularityError&) {
    }
  });
  rep.properties.push_back(upper("det M = 1", det, 1e-10));
  rep.properties.push_back(upper("numerical vs closed-form amplitudes", oracle, 1e-7));
  rep.properties.push_back(upper("matrix rebuilt from amplitudes", recon, 1e-10));

  // real potentials: conjugate-potential route equals the direct one
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  struct RealCase {
    double amp, width, k;
  };
  std::vector<RealCase> real_cases;
  for (int i = 0; i < 30; ++i) real_cases.push_back({-3.0 + 6.0 * unit(rng), 0.5 + 2.0 * unit(rng), 0.3 + 4.0 * unit(rng)});
  Ensemble conj_route(real_cases.size());
  for_each_index(real_cases.size(), exec, [&](std::size_t i) {
    const RealCase rc = real_cases[i];
    const SampledPotential pot{0.0, 3.0, [rc](double x) {
                                 const double u = (x - 1.5) / rc.width;
                                 return cplx{rc.amp * std::exp(-u * u), 0.0};
                               }};
    const ScatteringAmplitudes direct = amplitudes_from_matrix(transfer_matrix(pot, rc.k, 1e-11));
    conj_route.set(i, std::abs(left_reflection_via_conjugate(pot, rc.k, 1e-11) - direct.R_left));
  });
  rep.properties.push_back(upper("conjugate-potential route for real potentials", conj_route, 1e-8));

  // path integral vs conjugate-potential route, small coupling
  const auto small = random_ensemble(seed + 1, 40, 3, 0.5, 0.1, 3.0);
  Ensemble path(small.size());
  for_each_index(small.size(), exec, [&](std::size_t i) {
    const RandomConfig& c = small[i];
    const SampledPotential pot = exponential_potential(unit_spec(c));
    try {
      path.set(i, std::abs(left_reflection_integral(pot, c.gamma, 1e-11) -
                           left_reflection_via_conjugate(pot, c.gamma, 1e-11)));
    } catch (const DegenerateError&) {
    }
  });
  rep.properties.push_back(upper("path integral vs conjugate-potential route", path, 1e-6));

  // two cells: M = P M1 P^{-1} M1 with P = diag(e^{-ikc}, e^{ikc})
  const auto two = random_ensemble(seed + 2, 30, 1, 2.0, 0.1, 5.0);
  Ensemble compose(two.size());
  for_each_index(two.size(), exec, [&](std::size_t i) {
    const RandomConfig& c = two[i];
    const cplx a{c.a_re, c.a_im};
    const double len = 2.0 * kPi;  // m = 2, k0 = 1
    const PotentialSpec spec = make_spec(a * a, 2, len);
    const TransferMatrix full = transfer_matrix(exponential_potential(spec), c.gamma, 1e-11);
    const SampledPotential cell{0.0, len / 2, [spec](double x) { return evaluate_potential(spec, x); }};
    const TransferMatrix m1 = transfer_matrix(cell, c.gamma, 1e-11);
    const cplx p = std::polar(1.0, -c.gamma * len / 2);
    // shifted cell: P M1 P^{-1}
    const cplx s11 = m1.m11, s12 = m1.m12 * p * p, s21 = m1.m21 / (p * p), s22 = m1.m22;
    const cplx c11 = s11 * m1.m11 + s12 * m1.m21, c12 = s11 * m1.m12 + s12 * m1.m22;
    const cplx c21 = s21 * m1.m11 + s22 * m1.m21, c22 = s21 * m1.m12 + s22 * m1.m22;
    compose.set(i, std::max({std::abs(c11 - full.m11), std::abs(c12 - full.m12),
                             std::abs(c21 - full.m21), std::abs(c22 - full.m22)}));
  });
  rep.properties.push_back(upper("two-cell composition", compose, 1e-8));
  return rep;
}

SuiteReport validate_analytic(std::uint64_t seed, Execution exec) {
  SuiteReport rep{"analytic", seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // mu = 0 grid: k L in pi Z, gamma not an integer
  struct GridCase {
    int m;
    double gamma;
    cplx a;
  };
  std::vector<GridCase> mu_zero, control;
  for (int m = 1; m <= 4; ++m)
    for (int j = 1; j <= 4 * m; ++j) {
      if (j % m == 0) continue;
      const cplx a = std::polar(0.1 + 1.9 * unit(rng), 2.0 * kPi * unit(rng));
      mu_zero.push_back({m, static_cast<double>(j) / m, a});
    }
  for (int m = 1; m <= 4; ++m)
    for (int j = 0; j < 4 * m; ++j) {
      const double gamma = (j + 0.37) / m;
      for (int tries = 0; tries < 100; ++tries) {
        const cplx a = std::polar(0.1 + 1.9 * unit(rng), 2.0 * kPi * unit(rng));
        double rel_r = 0.0, rel_l = 0.0;
        const double vr = std::abs(bessel::bessel_j(gamma + 1.0, a));
        const double vl = std::abs(bessel::bessel_j(1.0 - gamma, a));
        rel_r = vr / std::max(std::abs(bessel::bessel_j(gamma, a)), std::abs(bessel::bessel_j(gamma + 2.0, a)));
        rel_l = vl / std::max(std::abs(bessel::bessel_j(-gamma, a)), std::abs(bessel::bessel_j(2.0 - gamma, a)));
        if (rel_r > 0.1 && rel_l > 0.1) {
          control.push_back({m, gamma, a});
          break;
        }
      }
    }
  Ensemble mz_closed(mu_zero.size()), mz_numeric(mu_zero.size()), ctrl(control.size());
  for_each_index(mu_zero.size(), exec, [&](std::size_t i) {
    const GridCase& g = mu_zero[i];
    const WaveContext ctx = unit_context(g.m, g.gamma, g.a);
    mz_closed.set(i, max_witness(amplitudes_analytic(ctx)));
    const PotentialSpec spec = make_spec(g.a * g.a, g.m, g.m * kPi);
    mz_numeric.set(i, max_witness(amplitudes_from_matrix(
                          transfer_matrix(exponential_potential(spec), g.gamma, 1e-12))));
  });
  for_each_index(control.size(), exec, [&](std::size_t i) {
    const GridCase& g = control[i];
    try {
      ctrl.set(i, max_witness(amplitudes_analytic(unit_context(g.m, g.gamma, g.a))));
    } catch (const SpectralSingularityError&) {
    }
  });
  rep.properties.push_back(upper("bidirectional on the k L in pi Z grid (closed form)", mz_closed, 1e-9));
  rep.properties.push_back(upper("bidirectional on the k L in pi Z grid (numerical)", mz_numeric, 1e-9));
  rep.properties.push_back(lower("visible on the control grid", ctrl, 1e-6));

  // right/left invisibility at Bessel zeros
  struct ZeroCase {
    int m;
    double gamma;
    cplx a;
    bool right;
  };
  std::vector<ZeroCase> zeros;
  for (int m : {1, 3})
    for (double g : {0.3, 1.0, 1.7, 2.5}) {
      for (const auto& z : bessel::real_zeros(g + 1.0, 5)) zeros.push_back({m, g, z.location, true});
      for (const auto& z : bessel::real_zeros(1.0 - g, 5)) zeros.push_back({m, g, z.location, false});
    }
  Ensemble inv(zeros.size()), vis(zeros.size());
  for_each_index(zeros.size(), exec, [&](std::size_t i) {
    const ZeroCase& z = zeros[i];
    const WaveContext ctx = unit_context(z.m, z.gamma, z.a);
    const ScatteringAmplitudes amp = amplitudes_analytic(ctx);
    const double t1 = std::abs(transmission_deficit(ctx));
    if (z.right) {
      inv.set(i, std::max(t1, std::abs(amp.R_right)));
      vis.set(i, std::abs(amp.R_left));
    } else {
      inv.set(i, std::max(t1, std::abs(amp.R_left)));
      vis.set(i, std::abs(amp.R_right));
    }
  });
  rep.properties.push_back(upper("T = 1 and one reflection zero at Bessel zeros", inv, 1e-9));
  rep.properties.push_back(lower("other reflection nonzero at Bessel zeros", vis, 1e-6));

  // leading small-a terms
  struct PertCase {
    int n, m;
    cplx a;
  };
  std::vector<PertCase> pert;
  for (int n : {1, 2})
    for (int m : {1, 3})
      for (int j = 0; j < 4; ++j) pert.push_back({n, m, std::polar(0.1, 2.0 * kPi * (j + 0.125) / 4)});
  Ensemble pert_err(pert.size());
  for_each_index(pert.size(), exec, [&](std::size_t i) {
    const PertCase& p = pert[i];
    const WaveContext ctx = unit_context(p.m, p.n, p.a);
    const ScatteringAmplitudes ex = amplitudes_analytic(ctx);
    const ScatteringAmplitudes lead = amplitudes_perturbative(ctx);
    const cplx dt = transmission_deficit(ctx);
    pert_err.set(i, std::max({std::abs(ex.R_left - lead.R_left) / std::abs(lead.R_left),
                              std::abs(ex.R_right - lead.R_right) / std::abs(lead.R_right),
                              std::abs(dt - (lead.T - 1.0)) / std::abs(lead.T - 1.0)}));
  });
  rep.properties.push_back(upper("leading-order expansions at |a| = 0.1", pert_err, 0.05));

  // integer-gamma limit, conjugate-potential relation, time-reversal duality
  const auto cfgs = random_ensemble(seed + 3, 100, 5, 2.0, 0.1, 5.0);
  Ensemble limit(cfgs.size()), relation(cfgs.size()), duality(cfgs.size());
  for_each_index(cfgs.size(), exec, [&](std::size_t i) {
    const RandomConfig& c = cfgs[i];
    const cplx a{c.a_re, c.a_im};
    try {
      const int n = std::max(1, static_cast<int>(std::nearbyint(c.gamma)));
      const ScatteringAmplitudes at = amplitudes_analytic(unit_context(c.m, n, a));
      const ScatteringAmplitudes lo = amplitudes_analytic(unit_context(c.m, n - 1e-6, a));
      const ScatteringAmplitudes hi = amplitudes_analytic(unit_context(c.m, n + 1e-6, a));
      limit.set(i, std::max(amp_distance(at, lo), amp_distance(at, hi)));

      const WaveContext ctx = unit_context(c.m, c.gamma, a);
      const ScatteringAmplitudes amp = amplitudes_analytic(ctx);
      const cplx cc = std::conj(*amp.R_right_conj_potential);
      const cplx lhs = amp.R_left * (amp.R_right * cc - 1.0);
      const cplx rhs = amp.T * amp.T * cc;
      relation.set(i, std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}));

      const ScatteringAmplitudes conj_amp = amplitudes_conjugate_analytic(ctx);
      const cplx one = std::conj(conj_amp.R_left);
      const cplx two = -amp.R_right / (amp.T * amp.T - amp.R_left * amp.R_right);
      duality.set(i, std::abs(one - two) / std::max(1.0, std::abs(two)));
    } catch (const SpectralSingularityError&) {
    } catch (const DegenerateError&) {
    }
  });
  rep.properties.push_back(upper("integer-gamma limit from gamma = n +/- 1e-6", limit, 1e-3));
  rep.properties.push_back(upper("conjugate-potential relation residual", relation, 1e-10));
  rep.properties.push_back(upper("time-reversal duality for v*", duality, 1e-10));

  // common zeros of J_{v+1} and J_{1-v}: reported only
  std::vector<double> nus;
  for (int i = 1; i <= 100; ++i) nus.push_back(0.05 * i);
  Ensemble common(nus.size());
  for_each_index(nus.size(), exec, [&](std::size_t i) {
    const double nu = nus[i];
    double smallest = INFINITY;
    for (const auto& z : bessel::real_zeros(nu + 1.0, 10)) {
      const cplx w = z.location;
      const double scale = std::max(std::abs(bessel::bessel_j(-nu, w)), std::abs(bessel::bessel_j(2.0 - nu, w)));
      smallest = std::min(smallest, std::abs(bessel::bessel_j(1.0 - nu, w)) / scale);
    }
    common.set(i, smallest);
  });
  PropertyResult probe = lower("no common real zero of J_{v+1} and J_{1-v} (probe)", common, 1e-8,
                               "smallest relative |J_{1-v}| over the first 10 zeros of J_{v+1}");
  probe.asserted = false;
  rep.properties.push_back(probe);
  return rep;
}

std::vector<SuiteReport> run_suite(Suite suite, std::uint64_t seed, Execution exec) {
  std::vector<SuiteReport> out;
  if (suite == Suite::bessel || suite == Suite::all) out.push_back(validate_bessel(seed, exec));
  if (suite == Suite::transfer || suite == Suite::all) out.push_back(validate_transfer(seed, exec));
  if (suite == Suite::analytic || suite == Suite::all) out.push_back(validate_analytic(seed, exec));
  return out;
}

}  // namespace scatter1d
