#include "scatter1d/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "scatter1d/bessel.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {
namespace {

using bessel::bessel_j;
using bessel::bessel_j_derivative;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ValueAndSlope {
  cplx f;
  cplx df;
};

// a^2 J_lo(a) J_hi(a) + c and its derivative.
ValueAndSlope product_equation(double lo, double hi, cplx c, cplx a, bool with_slope) {
  const cplx jl = bessel_j(lo, a);
  const cplx jh = bessel_j(hi, a);
  ValueAndSlope out{a * a * jl * jh + c, {0.0, 0.0}};
  if (with_slope)
    out.df = 2.0 * a * jl * jh +
             a * a * (bessel_j_derivative(lo, a) * jh + jl * bessel_j_derivative(hi, a));
  return out;
}

struct Equation {
  double lo, hi;
  cplx c;

  cplx value(cplx a) const { return product_equation(lo, hi, c, a, false).f; }
};

Equation general_equation(double gamma, int m) {
  const cplx mu = interference_factor(gamma, m);
  if (mu == cplx{0.0, 0.0})
    throw NoSolutionError("singularity: mu vanishes at gamma = " + std::to_string(gamma) +
                          ", m = " + std::to_string(m) + "; the equation has no solution");
  return {1.0 - gamma, gamma + 1.0, 2.0 * kI * gamma / (kPi * mu)};
}

Equation integer_equation(int n, int m) {
  return {n - 1.0, n + 1.0, 2.0 * kI * static_cast<double>(n) / (kPi * m)};
}

cplx newton(const Equation& eq, cplx seed) {
  cplx a = seed;
  cplx fa = eq.value(a);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    if (fa == cplx{0.0, 0.0}) return a;
    ValueAndSlope vs = product_equation(eq.lo, eq.hi, eq.c, a, true);
    cplx df = vs.df;
    if (std::abs(df) < 1e-14) {
      const double h = 1e-6 * (1.0 + std::abs(a));
      df = (eq.value(a + h) - eq.value(a - h)) / (2.0 * h);
      if (std::abs(df) < 1e-14)
        throw ConvergenceError("singularity: derivative vanishes near a = " +
                               std::to_string(a.real()) + std::to_string(a.imag()) + "i");
    }
    cplx step = fa / df;
    // damping: halve until |f| does not grow
    cplx trial = a - step;
    cplx ft;
    bool accepted = false;
    for (int h = 0; h < 30; ++h) {
      try {
        ft = eq.value(trial);
        if (std::abs(ft) <= std::abs(fa) || std::abs(step) <= 8.0 * kEps * std::abs(a)) {
          accepted = true;
          break;
        }
      } catch (const AccuracyError&) {
      } catch (const DomainError&) {
      }
      step *= 0.5;
      trial = a - step;
    }
    if (!accepted) {
      if (std::abs(fa) < kRootResidual) return a;
      throw ConvergenceError("singularity: Newton stalled");
    }
    const double size = std::abs(step);
    a = trial;
    fa = ft;
    if (size <= 4.0 * kEps * std::max(1.0, std::abs(a))) return a;
  }
  if (std::abs(fa) < kRootResidual) return a;
  throw ConvergenceError("singularity: Newton did not converge within " +
                         std::to_string(kNewtonMaxIter) + " iterations");
}

// representative of {a, -a} with Re a >= 0; roots on the imaginary axis get
// Im a > 0 and an exact zero real part
cplx canonical(cplx a) {
  if (std::abs(a.real()) <= 1e-14 * std::abs(a)) a = {0.0, a.imag()};
  if (a.real() < 0.0 || (a.real() == 0.0 && a.imag() < 0.0)) return -a;
  return a;
}

SingularitySolution finish(cplx a, double gamma, int m, double residual) {
  a = canonical(a);
  return {a, 1.0 - a * a / (gamma * gamma), gamma, m, residual, std::nullopt};
}

bool is_integer(double g, int& n) {
  const double r = std::nearbyint(g);
  if (std::abs(g - r) < kIntegerSnap && r >= 1.0) {
    n = static_cast<int>(r);
    return true;
  }
  return false;
}

// spherical j_q(a) for q = -p .. p+1 via the three-term recurrence from
// j_0 = sin a / a and j_{-1} = cos a / a
void spherical_pair(int p, cplx a, cplx& j_up, cplx& j_down) {
  const cplx j0 = std::sin(a) / a;
  const cplx jm1 = std::cos(a) / a;
  // upward: j_{q+1} = (2q+1)/a j_q - j_{q-1}
  cplx prev = jm1, cur = j0;
  for (int q = 0; q <= p; ++q) {
    const cplx next = (2.0 * q + 1.0) / a * cur - prev;
    prev = cur;
    cur = next;
  }
  j_up = cur;  // j_{p+1}
  // downward: j_{q-1} = (2q+1)/a j_q - j_{q+1}
  cplx above = j0, here = jm1;
  if (p == 0) {
    j_down = j0;
    return;
  }
  for (int q = -1; q > -p; --q) {
    const cplx below = (2.0 * q + 1.0) / a * here - above;
    above = here;
    here = below;
  }
  j_down = here;  // j_{-p}
}

// real-valued restriction of the half-integer mismatch along a = t * dir
double half_integer_real(int p, cplx dir, double t) { return half_integer_mismatch(p, t * dir).real(); }

std::optional<double> first_root(int p, cplx dir, double t0, double t1, double dt) {
  double ta = t0, fa = half_integer_real(p, dir, ta);
  for (double tb = t0 + dt; tb <= t1 + 1e-12; tb += dt) {
    const double fb = half_integer_real(p, dir, tb);
    if (fa == 0.0) return ta;
    if ((fa < 0.0) != (fb < 0.0)) {
      double lo = ta, hi = tb, flo = fa;
      while (hi - lo > 2.0 * kEps * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = half_integer_real(p, dir, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double t = 0.5 * (lo + hi);
      // a genuine root, not a pole of the recurrence
      if (std::abs(half_integer_mismatch(p, t * dir)) < kRootResidual) return t;
    }
    ta = tb;
    fa = fb;
  }
  return std::nullopt;
}

}  // namespace

double singularity_residual(double gamma, int m, cplx a) {
  int n = 0;
  if (is_integer(gamma, n)) return std::abs(integer_equation(n, m).value(a));
  return std::abs(general_equation(gamma, m).value(a));
}

SingularitySolution solve_general(double gamma, int m, cplx seed) {
  if (!(gamma > 0.0) || m < 1) throw DomainError("singularity: gamma > 0 and m >= 1 required");
  int n = 0;
  if (is_integer(gamma, n)) throw DomainError("singularity: integer gamma; use solve_integer_gamma");
  const Equation eq = general_equation(gamma, m);
  const cplx a = newton(eq, seed);
  const double res = std::abs(eq.value(a));
  if (!(res < kRootResidual))
    throw ConvergenceError("singularity: residual " + std::to_string(res) + " above threshold");
  return finish(a, gamma, m, res);
}

cplx integer_gamma_seed(int n, int m, int branch) {
  const double base = std::tgamma(n + 1.0) * std::tgamma(n + 2.0) / (2.0 * kPi * m);
  // base / i = base e^{-i pi/2}
  const double order = 2.0 * n + 2.0;
  const double mod = 2.0 * std::pow(base, 1.0 / order);
  const double arg = -0.5 * kPi / order + 2.0 * kPi * branch / order;
  return std::polar(mod, arg);
}

std::vector<SingularitySolution> integer_gamma_roots(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("singularity: n >= 1 and m >= 1 required");
  const Equation eq = integer_equation(n, m);
  std::vector<SingularitySolution> out;
  for (int j = 0; j < 2 * n + 2; ++j) {
    const cplx seed = integer_gamma_seed(n, m, j);
    if (!((1.0 - seed * seed / double(n * n)).real() > 1.0)) continue;
    cplx a;
    try {
      a = newton(eq, seed);
    } catch (const ConvergenceError&) {
      continue;
    }
    const double res = std::abs(eq.value(a));
    SingularitySolution s = finish(a, n, m, res);
    if (!(res < kRootResidual) || !(s.eps0.real() > 1.0)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const SingularitySolution& o) {
      return std::abs(o.a_frak - s.a_frak) < kDedupDistance;
    });
    if (!dup) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.a_frak.real() != y.a_frak.real()) return x.a_frak.real() < y.a_frak.real();
    return x.a_frak.imag() < y.a_frak.imag();
  });
  return out;
}

SingularitySolution solve_integer_gamma(int n, int m) {
  const auto roots = integer_gamma_roots(n, m);
  if (roots.empty())
    throw ConvergenceError("singularity: no branch seed converged for n = " + std::to_string(n) +
                           ", m = " + std::to_string(m));
  return *std::min_element(roots.begin(), roots.end(),
                           [](const auto& x, const auto& y) { return x.residual < y.residual; });
}

cplx half_integer_mismatch(int p, cplx a) {
  cplx up, down;
  spherical_pair(p, a, up, down);
  const double rhs = (p % 2 == 0 ? 1.0 : -1.0) * (2.0 * p + 1.0);
  return 2.0 * a * a * a * up * down - rhs;
}

SingularitySolution solve_half_integer(int p, int m) {
  if (p < 0) throw DomainError("singularity: p >= 0 required");
  if (m < 1 || m % 2 == 0)
    throw DomainError("singularity: half-integer gamma needs odd m (even m gives mu = 0)");
  const double gamma = p + 0.5;
  // imaginary axis first (eps0 > 1), then 0 < a < gamma (0 < eps0 < 1)
  cplx a;
  if (auto y = first_root(p, kI, 1e-3, 30.0, 1e-3)) {
    a = *y * kI;
  } else if (auto x = first_root(p, {1.0, 0.0}, 1e-3, gamma * (1.0 - 1e-9), 1e-3)) {
    a = *x;
  } else {
    throw NoSolutionError("singularity: no solution with real positive eps0 for p = " +
                          std::to_string(p));
  }
  SingularitySolution s = finish(a, gamma, m, std::abs(half_integer_mismatch(p, a)));
  s.eps0.imag(0.0);
  return s;
}

double verify_with_ode(const SingularitySolution& s, double tol) {
  // k0 = 1, so z = a^2 and k = gamma
  const PotentialSpec spec = make_spec(s.a_frak * s.a_frak, s.m, s.m * kPi);
  const TransferMatrix M = transfer_matrix(exponential_potential(spec), s.gamma, tol);
  return std::abs(M.m22);
}

std::vector<SingularitySolution> scan_singularities(const ScanGrid& grid, Execution exec) {
  if (grid.gamma_count < 1 || grid.re_count < 1 || grid.im_count < 1 || grid.m < 1)
    throw DomainError("scan: grid counts and m must be positive");
  struct Task {
    double gamma;
    cplx seed;
  };
  auto axis = [](double lo, double hi, int count, int i) {
    return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  };
  std::vector<Task> tasks;
  for (int g = 0; g < grid.gamma_count; ++g)
    for (int r = 0; r < grid.re_count; ++r)
      for (int q = 0; q < grid.im_count; ++q)
        tasks.push_back({axis(grid.gamma_min, grid.gamma_max, grid.gamma_count, g),
                         {axis(grid.re_min, grid.re_max, grid.re_count, r),
                          axis(grid.im_min, grid.im_max, grid.im_count, q)}});

  std::vector<std::optional<SingularitySolution>> found(tasks.size());
  for_each_index(tasks.size(), exec, [&](std::size_t i) {
    const Task& t = tasks[i];
    try {
      int n = 0;
      if (is_integer(t.gamma, n)) {
        const Equation eq = integer_equation(n, grid.m);
        const cplx a = newton(eq, t.seed);
        const double res = std::abs(eq.value(a));
        if (res < kRootResidual) found[i] = finish(a, n, grid.m, res);
      } else {
        found[i] = solve_general(t.gamma, grid.m, t.seed);
      }
    } catch (const NoSolutionError&) {
    } catch (const ConvergenceError&) {
    } catch (const DomainError&) {
    } catch (const AccuracyError&) {
    }
  });

  std::vector<SingularitySolution> roots;
  for (const auto& f : found) {
    if (!f) continue;
    const bool dup = std::any_of(roots.begin(), roots.end(), [&](const SingularitySolution& o) {
      return o.gamma == f->gamma && std::abs(o.a_frak - f->a_frak) < kDedupDistance;
    });
    if (!dup) roots.push_back(*f);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.gamma != y.gamma) return x.gamma < y.gamma;
    if (x.a_frak.real() != y.a_frak.real()) return x.a_frak.real() < y.a_frak.real();
    return x.a_frak.imag() < y.a_frak.imag();
  });

  std::vector<char> keep(roots.size(), 0);
  for_each_index(roots.size(), exec, [&](std::size_t i) {
    try {
      roots[i].ode_abs_m22 = verify_with_ode(roots[i]);
      keep[i] = *roots[i].ode_abs_m22 < kSingularityEps;
    } catch (const IntegrationError&) {
    } catch (const AccuracyError&) {
    }
  });
  std::vector<SingularitySolution> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (keep[i]) out.push_back(roots[i]);
  return out;
}

}  // namespace scatter1d
