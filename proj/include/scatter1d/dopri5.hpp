#pragma once

// Adaptive Dormand-Prince 5(4) for complex linear systems y' = f(x, y) with a
// fixed number of components. PI step control, FSAL.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include "scatter1d/errors.hpp"
#include "scatter1d/types.hpp"

namespace scatter1d::ode {

struct Stats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
};

struct Options {
  double tol = 1e-10;      // mixed absolute/relative local error target
  double h_max = 0.0;      // 0 means (b - a) / 16
  long max_steps = 5'000'000;
};

// Integrates from a to b (a < b). `observe(x, y)` is called after each accepted
// step. Throws IntegrationError when the step size underflows, AccuracyError
// when max_steps is exhausted.
template <std::size_t N, class Rhs, class Observe>
std::array<cplx, N> integrate(Rhs&& rhs, double a, double b, std::array<cplx, N> y,
                              const Options& opt, Stats& stats, Observe&& observe) {
  using State = std::array<cplx, N>;
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                   a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double safety = 0.9, beta = 0.04, alpha = 0.2 - 0.75 * beta;
  constexpr double fac_min = 0.2, fac_max = 10.0;

  const double span = b - a;
  if (!(span > 0.0)) return y;
  const double h_max = opt.h_max > 0.0 ? std::min(opt.h_max, span) : span / 16.0;
  const double h_min = 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)));

  State k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  auto axpy = [&](State& out, const State& base, double h,
                  std::initializer_list<std::pair<double, const State*>> terms) {
    for (std::size_t i = 0; i < N; ++i) {
      cplx acc{0.0, 0.0};
      for (const auto& [c, s] : terms) acc += c * (*s)[i];
      out[i] = base[i] + h * acc;
    }
  };

  double x = a;
  rhs(x, y, k1);
  ++stats.evaluations;
  double h = std::min(h_max, span / 64.0);
  double err_old = 1e-4;
  bool last_rejected = false;

  while (x < b) {
    if (stats.accepted + stats.rejected >= opt.max_steps)
      throw AccuracyError("ode: step budget exhausted before reaching the end of the interval");
    bool final_step = false;
    if (x + h >= b) {
      h = b - x;
      final_step = true;
    }
    axpy(tmp, y, h, {{a21, &k1}});
    rhs(x + c2 * h, tmp, k2);
    axpy(tmp, y, h, {{a31, &k1}, {a32, &k2}});
    rhs(x + c3 * h, tmp, k3);
    axpy(tmp, y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    rhs(x + c4 * h, tmp, k4);
    axpy(tmp, y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    rhs(x + c5 * h, tmp, k5);
    axpy(tmp, y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    const double x_new = final_step ? b : x + h;
    rhs(x_new, tmp, k6);
    axpy(ynew, y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    rhs(x_new, ynew, k7);
    stats.evaluations += 6;

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
      const double sc = opt.tol * std::max({1.0, std::abs(y[i]), std::abs(ynew[i])});
      err = std::max(err, std::abs(e) / sc);
    }
    if (!std::isfinite(err))
      throw IntegrationError("ode: non-finite state", x);

    if (err <= 1.0) {
      ++stats.accepted;
      x = x_new;
      y = ynew;
      k1 = k7;
      observe(x, y);
      double fac = err == 0.0 ? fac_max
                              : safety * std::pow(err, -alpha) * std::pow(err_old, beta);
      fac = std::clamp(fac, fac_min, last_rejected ? 1.0 : fac_max);
      err_old = std::max(err, 1e-4);
      last_rejected = false;
      if (final_step) break;
      h = std::min(h * fac, h_max);
    } else {
      ++stats.rejected;
      const double fac = std::max(fac_min, safety * std::pow(err, -alpha));
      h *= fac;
      last_rejected = true;
    }
    if (h < h_min)
      throw IntegrationError("ode: step size underflow at x = " + std::to_string(x), x);
  }
  return y;
}

template <std::size_t N, class Rhs>
std::array<cplx, N> integrate(Rhs&& rhs, double a, double b, std::array<cplx, N> y,
                              const Options& opt, Stats& stats) {
  return integrate<N>(std::forward<Rhs>(rhs), a, b, y, opt, stats, [](double, const auto&) {});
}

}  // namespace scatter1d::ode
