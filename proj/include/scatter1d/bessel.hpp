#pragma once

// Bessel functions of the first kind J_nu(w) for real order and complex
// argument, their derivatives and zeros.
//
// Branch: principal, arg w in (-pi, pi]. A negative real argument with a
// signed-zero imaginary part is treated as lying on the upper side of the cut.
//
// Evaluation: ascending series for |w| <= kSeriesRadius while its term
// cancellation stays below 1e3 (and always when -nu > |w|), otherwise
// Miller backward recurrence normalised with the Gegenbauer sum
//   e^{-/+iw} (w/2)^nu0 = sum_k c_k (-/+i)^k J_{nu0+k}(w),
// followed by downward recurrence for negative orders.
//
// The derivative uses J'_nu(w) = J_{nu-1}(w) - (nu/w) J_nu(w). (Some texts
// print this identity as z J_{nu-1} - nu J_nu, which is z times the correct
// expression.)

#include <optional>
#include <utility>
#include <vector>

#include "scatter1d/types.hpp"

namespace scatter1d::bessel {

// Largest |w| accepted. Beyond this the recurrence start-up and the
// normalisation sum are not tuned.
inline constexpr double kMaxArgument = 60.0;
// Upper bound on |w| for the ascending series.
inline constexpr double kSeriesRadius = 12.0;
// Function-value tolerance for refined zeros.
inline constexpr double kZeroTolerance = 1e-10;
inline constexpr double kDefaultTolerance = 1e-10;

struct BesselEval {
  double order;
  cplx argument;
  cplx value;
  cplx derivative;
};

enum class ZeroKind { real_axis, imaginary_axis };

struct BesselZero {
  double order;
  cplx location;
  ZeroKind kind;
  int index;  // 1-based position on its half-line
};

// J_nu(w). Throws DomainError for non-finite input or a pole at w = 0
// (negative non-integer order), AccuracyError if |w| > kMaxArgument or the
// error estimate exceeds tol relative to the local scale of J.
cplx bessel_j(double nu, cplx w, double tol = kDefaultTolerance);

// J'_nu(w). Throws DomainError at w = 0 unless nu is 0 or 1.
cplx bessel_j_derivative(double nu, cplx w, double tol = kDefaultTolerance);

BesselEval evaluate(double nu, cplx w, double tol = kDefaultTolerance);

// First `count` positive real zeros of J_nu in increasing order. Valid for any
// real nu; for nu > -1 these are all the zeros. Throws ConvergenceError if a
// bracket does not refine to kZeroTolerance.
std::vector<BesselZero> real_zeros(double nu, int count);

// True when J_nu has exactly one conjugate pair of purely imaginary zeros,
// i.e. nu in (-2s-2, -2s-1) for some integer s >= 0.
bool in_hurwitz_band(double nu);

// The pair {+iy, -iy} (first element has y > 0), or nullopt outside the band.
std::optional<std::pair<BesselZero, BesselZero>> imaginary_zeros(double nu);

// Residuals of the standard identities at (nu, w), each divided by the
// largest term magnitude of its identity (floored at 1).
struct IdentityResiduals {
  // J_nu(e^{i pi} w) = e^{i nu pi} J_nu(w) (continued across the cut).
  double analytic_continuation;
  // J_{nu+1}J_{-nu} + J_nu J_{-nu-1} = -2 sin(pi nu)/(pi w); non-integer nu.
  std::optional<double> cross_product;
  // J_{nu+1}J_{1-nu} - J_{nu-1}J_{-nu-1} = 4 nu sin(pi nu)/(pi w^2).
  std::optional<double> shifted_cross_product;
  // w J_{nu+1} - 2 nu J_nu + w J_{nu-1}.
  double recurrence;
  // max(|J_{nu-1}|, |J_nu|, |J_{nu+1}|, 1), for relative comparisons.
  double scale;
};

IdentityResiduals identity_residuals(double nu, cplx w);

}  // namespace scatter1d::bessel
