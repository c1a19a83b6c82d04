#include "scatter1d/bessel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "scatter1d/errors.hpp"

namespace scatter1d::bessel {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesConditionLimit = 1e3;

struct Evaluated {
  cplx value;
  double error;  // absolute error estimate
  double condition = 1.0;  // sum of |terms| over |sum| for the series
};

bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

// Drops the sign of a zero imaginary part so that the negative real axis maps
// to arg = +pi.
cplx normalise(cplx w) {
  if (w.imag() == 0.0) return {w.real(), 0.0};
  return w;
}

cplx principal_power(cplx base, double nu) {
  const double r = std::abs(base);
  const double theta = std::arg(normalise(base));
  return std::polar(std::pow(r, nu), nu * theta);
}

// r_k = 1/Gamma(a + k) for k = 0, 1, ..., extended on demand. The anchor is
// the first index with a + k >= 1; lower indices are reached by multiplying
// with (a + k), so poles of Gamma produce exact zeros and no division by a
// small number ever happens.
class ReciprocalGamma {
public:
  explicit ReciprocalGamma(double a) : a_(a) {
    int anchor = 0;
    while (a_ + anchor < 1.0) ++anchor;
    r_.resize(static_cast<std::size_t>(anchor) + 1);
    r_[anchor] = 1.0 / std::tgamma(a_ + anchor);
    for (int k = anchor - 1; k >= 0; --k) r_[k] = r_[k + 1] * (a_ + k);
  }

  double operator()(int k) {
    while (static_cast<int>(r_.size()) <= k) {
      const int last = static_cast<int>(r_.size()) - 1;
      r_.push_back(r_[last] / (a_ + last));
    }
    return r_[k];
  }

private:
  double a_;
  std::vector<double> r_;
};

// Ascending series sum_k (-w^2/4)^k / (k! Gamma(nu+k+1)) times (w/2)^nu.
// nu is not a negative integer here.
Evaluated series(double nu, cplx w) {
  const cplx half = 0.5 * w;
  const cplx q = -half * half;
  const double aq = std::abs(q);
  ReciprocalGamma rg(nu + 1.0);

  cplx sum = 0.0;
  double abs_sum = 0.0;
  cplx power = 1.0;  // q^k / k!
  const int k_min = static_cast<int>(std::max(0.0, -nu)) + 2;
  for (int k = 0; k < 600; ++k) {
    if (k > 0) power *= q / static_cast<double>(k);
    const cplx term = power * rg(k);
    sum += term;
    abs_sum += std::abs(term);
    const double decay = static_cast<double>(k + 1) * (k + 1 + nu);
    if (k >= k_min && decay > aq && std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
  }
  const cplx prefactor = principal_power(half, nu);
  const double mag = std::abs(prefactor);
  const double condition = abs_sum / std::max(std::abs(sum), std::numeric_limits<double>::min());
  return {prefactor * sum, 4.0 * kEps * abs_sum * mag + kEps * std::abs(sum) * mag, condition};
}

// Miller backward recurrence for J_{nu0+j}, j = 0..top, nu0 in [0, 1).
// Returns the normalised sequence and a relative error estimate.
struct MillerResult {
  std::vector<cplx> values;
  double relative_error;
};

MillerResult miller(double nu0, cplx w, int top) {
  const double aw = std::abs(w);
  const int start =
      std::max(top, static_cast<int>(aw)) + static_cast<int>(std::ceil(8.0 * std::cbrt(aw))) + 40;

  std::vector<cplx> y(static_cast<std::size_t>(start) + 2, cplx{0.0, 0.0});
  y[start] = 1e-200;
  const cplx inv_w = 1.0 / w;
  for (int j = start; j >= 1; --j) {
    y[j - 1] = (2.0 * (nu0 + j)) * inv_w * y[j] - y[j + 1];
    if (std::abs(y[j - 1]) > 1e200) {
      for (int i = j - 1; i <= start; ++i) y[i] *= 1e-200;
    }
  }

  // Gegenbauer normalisation with the exponential of growing modulus.
  const bool upper = w.imag() >= 0.0;
  const cplx sigma = upper ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
  const cplx expo = upper ? std::exp(-kI * w) : std::exp(kI * w);

  cplx sum = y[0];
  double abs_sum = std::abs(y[0]);
  cplx sk = 1.0;
  double e = 1.0;  // (2nu0+1)_{k-1}/(k-1)!
  for (int k = 1; k <= start; ++k) {
    sk *= sigma;
    const double c = 2.0 * (nu0 + k) / k * e;
    const cplx term = c * sk * y[k];
    sum += term;
    abs_sum += std::abs(term);
    e *= (2.0 * nu0 + k) / k;
  }
  const cplx norm = expo * principal_power(0.5 * w, nu0) / (std::tgamma(nu0 + 1.0) * sum);

  MillerResult out;
  out.values.resize(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) out.values[j] = y[j] * norm;
  out.relative_error = 8.0 * kEps * (abs_sum / std::abs(sum)) + kEps * start;
  return out;
}

// J_nu via recurrence; handles negative orders by downward recurrence from
// J_{nu0}, J_{nu0+1}.
Evaluated recurrence(double nu, cplx w) {
  const double fl = std::floor(nu);
  const double nu0 = nu - fl;
  const int j = static_cast<int>(fl);
  if (j >= 0) {
    const MillerResult m = miller(nu0, w, j + 1);
    const double scale = std::max(std::abs(m.values[j]), std::abs(m.values[j + 1]));
    return {m.values[j], m.relative_error * scale};
  }
  const MillerResult m = miller(nu0, w, 1);
  cplx upper = m.values[1];
  cplx current = m.values[0];
  double scale = std::max(std::abs(upper), std::abs(current));
  const cplx inv_w = 1.0 / w;
  for (int step = 0; step < -j; ++step) {
    const double mu = nu0 - step;
    const cplx lower = (2.0 * mu) * inv_w * current - upper;
    upper = current;
    current = lower;
    scale = std::max(scale, std::abs(current));
  }
  // Each downward step can add a rounding error of order eps * scale.
  return {current, (m.relative_error + kEps * (-j)) * scale};
}

Evaluated evaluate_order(double nu, cplx w) {
  if (nu < 0.0 && is_integer(nu)) {
    const Evaluated r = evaluate_order(-nu, w);
    const bool odd = static_cast<long long>(-nu) % 2 != 0;
    return {odd ? -r.value : r.value, r.error};
  }
  if (std::abs(w) == 0.0) {
    if (nu == 0.0) return {1.0, 0.0};
    if (nu > 0.0) return {0.0, 0.0};
    throw DomainError("bessel_j: J_nu(0) is infinite for negative non-integer order");
  }
  // The series is used while its cancellation stays mild. Otherwise the
  // recurrence takes over, except for strongly negative orders (-nu > |w|)
  // where the downward leg leaves the oscillatory region and loses digits.
  const double aw = std::abs(w);
  if (aw <= kSeriesRadius) {
    const Evaluated s = series(nu, w);
    if (s.condition <= kSeriesConditionLimit || -nu > aw) return s;
  }
  return recurrence(nu, w);
}

void check_inputs(double nu, cplx w) {
  if (!std::isfinite(nu) || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw DomainError("bessel_j: non-finite argument");
  if (std::abs(w) > kMaxArgument) {
    std::ostringstream os;
    os << "bessel_j: |w| = " << std::abs(w) << " exceeds the supported bound " << kMaxArgument;
    throw AccuracyError(os.str());
  }
}

cplx checked(double nu, cplx w, double tol) {
  w = normalise(w);
  check_inputs(nu, w);
  const Evaluated r = evaluate_order(nu, w);
  if (r.error <= tol * std::abs(r.value)) return r.value;
  // Near a zero the relative error is meaningless; compare with the local
  // magnitude instead (J_nu and J_{nu+1} have no common zeros).
  const double scale = std::max(std::abs(r.value), std::abs(evaluate_order(nu + 1.0, w).value));
  if (r.error > tol * scale) {
    std::ostringstream os;
    os << "bessel_j: estimated error " << r.error << " exceeds tol " << tol << " at nu=" << nu
       << ", w=" << w;
    throw AccuracyError(os.str());
  }
  return r.value;
}

double real_part_j(double nu, double x) { return checked(nu, cplx{x, 0.0}, 1e-6).real(); }

// J_nu(iy) / (iy)^nu = 2^{-nu} sum_k (y/2)^{2k} / (k! Gamma(nu+k+1)), real.
double imaginary_axis_kernel(double nu, double y) {
  const double q = 0.25 * y * y;
  ReciprocalGamma rg(nu + 1.0);
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) power *= q / k;
    const double term = power * rg(k);
    sum += term;
    if (k > 2 && k + nu > 0 && std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

cplx bessel_j(double nu, cplx w, double tol) { return checked(nu, w, tol); }

cplx bessel_j_derivative(double nu, cplx w, double tol) {
  w = normalise(w);
  check_inputs(nu, w);
  if (std::abs(w) == 0.0) {
    if (nu == 0.0) return 0.0;
    if (nu == 1.0) return 0.5;
    throw DomainError("bessel_j_derivative: w = 0 requires nu in {0, 1}");
  }
  return checked(nu - 1.0, w, tol) - (nu / w) * checked(nu, w, tol);
}

BesselEval evaluate(double nu, cplx w, double tol) {
  return {nu, w, bessel_j(nu, w, tol), bessel_j_derivative(nu, w, tol)};
}

std::vector<BesselZero> real_zeros(double nu, int count) {
  if (!std::isfinite(nu)) throw DomainError("real_zeros: non-finite order");
  std::vector<BesselZero> zeros;
  if (count <= 0) return zeros;

  double x = 1e-6;
  double fx = real_part_j(nu, x);
  while (static_cast<int>(zeros.size()) < count) {
    const double step = std::min(0.05, 0.25 * x);
    const double xn = x + step;
    if (xn > kMaxArgument) throw ConvergenceError("real_zeros: zeros beyond supported argument range");
    const double fn = real_part_j(nu, xn);
    if ((fx < 0.0) != (fn < 0.0)) {
      double lo = x, hi = xn, flo = fx;
      for (int it = 0; it < 200 && hi - lo > 1e-9 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = real_part_j(nu, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      // Safeguarded Newton polish.
      double z = 0.5 * (lo + hi);
      for (int it = 0; it < 20; ++it) {
        const double f = real_part_j(nu, z);
        const double d = bessel_j_derivative(nu, cplx{z, 0.0}, 1e-6).real();
        if (d == 0.0) break;
        double zn = z - f / d;
        if (zn < lo || zn > hi) zn = 0.5 * (lo + hi);
        const bool done = std::abs(zn - z) <= 4.0 * kEps * z;
        z = zn;
        if (done) break;
      }
      const double residual = std::abs(bessel_j(nu, cplx{z, 0.0}, 1e-6));
      if (residual > kZeroTolerance) {
        std::ostringstream os;
        os << "real_zeros: zero near " << z << " of J_" << nu << " refined only to |J| = " << residual;
        throw ConvergenceError(os.str());
      }
      zeros.push_back({nu, cplx{z, 0.0}, ZeroKind::real_axis, static_cast<int>(zeros.size()) + 1});
    }
    x = xn;
    fx = fn;
  }
  return zeros;
}

bool in_hurwitz_band(double nu) {
  if (!std::isfinite(nu) || nu >= -1.0 || is_integer(nu)) return false;
  // nu in (-2s-2, -2s-1)  <=>  floor(-nu) is odd.
  const long long fl = static_cast<long long>(std::floor(-nu));
  return fl % 2 == 1;
}

std::optional<std::pair<BesselZero, BesselZero>> imaginary_zeros(double nu) {
  if (!in_hurwitz_band(nu)) return std::nullopt;

  double y = 1e-8;
  double fy = imaginary_axis_kernel(nu, y);
  for (;;) {
    const double yn = y * 1.05;
    if (yn > kMaxArgument) return std::nullopt;
    const double fn = imaginary_axis_kernel(nu, yn);
    if ((fy < 0.0) != (fn < 0.0)) {
      double lo = y, hi = yn, flo = fy;
      for (int it = 0; it < 200 && hi - lo > 2.0 * kEps * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = imaginary_axis_kernel(nu, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      if (std::abs(bessel_j(nu, cplx{0.0, root}, 1e-6)) > kZeroTolerance) {
        std::ostringstream os;
        os << "imaginary_zeros: J_" << nu << "(i" << root << ") not refined to tolerance";
        throw ConvergenceError(os.str());
      }
      BesselZero up{nu, cplx{0.0, root}, ZeroKind::imaginary_axis, 1};
      BesselZero down{nu, cplx{0.0, -root}, ZeroKind::imaginary_axis, 1};
      return std::make_pair(up, down);
    }
    y = yn;
    fy = fn;
  }
}

IdentityResiduals identity_residuals(double nu, cplx w) {
  if (std::abs(w) == 0.0) throw DomainError("identity_residuals: w must be nonzero");
  w = normalise(w);
  IdentityResiduals out{};

  const cplx jm = bessel_j(nu - 1.0, w, 1.0);
  const cplx j0 = bessel_j(nu, w, 1.0);
  const cplx jp = bessel_j(nu + 1.0, w, 1.0);
  out.scale = std::max({std::abs(jm), std::abs(j0), std::abs(jp), 1.0});
  out.recurrence = std::abs(w * jp - 2.0 * nu * j0 + w * jm) /
                   std::max({std::abs(w * jp), std::abs(2.0 * nu * j0), std::abs(w * jm), 1.0});

  // Rotating by e^{i pi} from arg <= 0 stays on the principal sheet; from
  // arg > 0 it crosses the cut, which the principal branch sees as e^{-i pi}.
  const cplx rotated = normalise(-w);
  const double sign = std::arg(w) <= 0.0 ? 1.0 : -1.0;
  out.analytic_continuation =
      std::abs(bessel_j(nu, rotated, 1.0) - std::polar(1.0, sign * nu * kPi) * j0) /
      std::max(std::abs(j0), 1.0);

  if (!is_integer(nu)) {
    const cplx jn0 = bessel_j(-nu, w, 1.0);
    const cplx jn1 = bessel_j(-nu - 1.0, w, 1.0);
    const cplx jn_plus = bessel_j(1.0 - nu, w, 1.0);
    const double s = std::sin(kPi * nu);
    const cplx r1 = 2.0 * s / (kPi * w);
    out.cross_product = std::abs(jp * jn0 + j0 * jn1 + r1) /
                        std::max({std::abs(jp * jn0), std::abs(j0 * jn1), std::abs(r1), 1.0});
    const cplx r2 = 4.0 * nu * s / (kPi * w * w);
    out.shifted_cross_product =
        std::abs(jp * jn_plus - jm * jn1 - r2) /
        std::max({std::abs(jp * jn_plus), std::abs(jm * jn1), std::abs(r2), 1.0});
  }
  return out;
}

}  // namespace scatter1d::bessel
