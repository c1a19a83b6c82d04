#pragma once

// Spectral singularities of the truncated exponential potential: values of
// (a, gamma) at which the transmission denominator
//   2 gamma - i pi a^2 mu J_{1-gamma}(a) J_{gamma+1}(a)
// vanishes, i.e. real-k poles of T.

#include <optional>
#include <vector>

#include "scatter1d/kernels.hpp"
#include "scatter1d/types.hpp"

namespace scatter1d {

inline constexpr double kRootResidual = 1e-10;
inline constexpr int kNewtonMaxIter = 100;
inline constexpr double kDedupDistance = 1e-6;

struct SingularitySolution {
  cplx a_frak;
  cplx eps0;        // 1 - a^2 / gamma^2
  double gamma = 0.0;
  int m = 1;
  double residual = 0.0;             // |mismatch of the defining equation|
  std::optional<double> ode_abs_m22; // set by scan_singularities and verify_with_ode
};

// f(a) = a^2 J_{1-gamma}(a) J_{gamma+1}(a) + 2 i gamma / (pi mu), zero exactly
// where the denominator vanishes. gamma not an integer. Throws
// NoSolutionError when mu = 0 (no singularity possible), DomainError for
// integer gamma, ConvergenceError on divergence or a stalled derivative.
SingularitySolution solve_general(double gamma, int m, cplx seed);

// a^2 J_{n-1}(a) J_{n+1}(a) = -2 i n / (pi m). Seeds
//   2 [n!(n+1)!/(2 pi i m)]^{1/(2n+2)} w^j, j = 0..2n+1,
// keeps branches with Re eps0 > 1 and returns the converged root with the
// smallest residual, canonicalised to Re a >= 0.
SingularitySolution solve_integer_gamma(int n, int m);

// Every distinct converged branch root of solve_integer_gamma, sorted.
std::vector<SingularitySolution> integer_gamma_roots(int n, int m);

// Leading-order seed on branch j.
cplx integer_gamma_seed(int n, int m, int branch);

// gamma = p + 1/2 with m odd. The equation reduces to
//   2 a^3 j_{p+1}(a) j_{-p}(a) = (-1)^p (2p + 1)
// with spherical Bessel functions j. Returns the solution with real positive
// eps0: first the imaginary axis (eps0 > 1), then the real segment
// 0 < a < gamma. Throws DomainError for even m or p < 0, NoSolutionError if
// nothing is found in the scanned window.
SingularitySolution solve_half_integer(int p, int m);

// Left side minus right side of the half-integer equation at a.
cplx half_integer_mismatch(int p, cplx a);

// |f| as used by solve_general / solve_integer_gamma at an arbitrary point.
double singularity_residual(double gamma, int m, cplx a);

struct ScanGrid {
  int m = 1;
  double gamma_min = 1.0;
  double gamma_max = 1.0;
  int gamma_count = 1;
  double re_min = 0.0, re_max = 1.0;
  double im_min = 0.0, im_max = 1.0;
  int re_count = 8, im_count = 8;
};

// Newton from every grid seed at every gamma; keeps roots with residual
// < 1e-10 that the transfer engine confirms with |M22| < 1e-8, merges those
// closer than 1e-6 in a, sorts by gamma then Re a then Im a.
std::vector<SingularitySolution> scan_singularities(const ScanGrid& grid,
                                                    Execution exec = Execution::parallel);

// |M22| at the root on the numerical path (k0 = 1 scaling).
double verify_with_ode(const SingularitySolution& s, double tol = 1e-12);

}  // namespace scatter1d
