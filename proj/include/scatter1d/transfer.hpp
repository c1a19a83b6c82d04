#pragma once

// Numerical transfer matrix of a finite-range potential.
//
// Convention: psi = A e^{ikx} + B e^{-ikx} outside the support and
// (A, B)_{x > a+} = M (A, B)_{x < a-}. The coefficients are evolved through the
// support with the interaction-picture system
//   d/dx (A, B) = v(x)/(2ik) [[1, e^{-2ikx}], [-e^{2ikx}, -1]] (A, B),
// whose generator is trace free, so det M = 1 up to integration error.

#include <functional>
#include <optional>

#include "scatter1d/potential.hpp"
#include "scatter1d/types.hpp"

namespace scatter1d {

inline constexpr double kTransferTolerance = 1e-10;
inline constexpr double kSingularityEps = 1e-8;
inline constexpr double kConjugateDegeneracy = 1e-12;
inline constexpr double kPathZeroEps = 1e-10;

struct SampledPotential {
  double a_minus = 0.0;
  double a_plus = 0.0;
  std::function<cplx(double)> v;  // only called on [a_minus, a_plus]
};

struct TransferMatrix {
  cplx m11{1.0, 0.0}, m12{0.0, 0.0}, m21{0.0, 0.0}, m22{1.0, 0.0};
  double k = 0.0;

  cplx det() const { return m11 * m22 - m12 * m21; }
};

struct ScatteringAmplitudes {
  cplx R_left;
  cplx R_right;
  cplx T;
  std::optional<cplx> R_right_conj_potential;  // R^r of v*, not conjugated
};

// Integrator step counts of the last call on this thread, for diagnostics.
struct IntegrationReport {
  long accepted = 0;
  long rejected = 0;
};
IntegrationReport last_integration_report();

// pre: k > 0, tol in (0, 1e-3]. Throws DomainError on bad arguments,
// IntegrationError when the step size collapses (position() is the stiff x).
TransferMatrix transfer_matrix(const SampledPotential& pot, double k, double tol = kTransferTolerance);

// T = 1/M22, R^r = M12/M22, R^l = -M21/M22. Throws SpectralSingularityError
// when |M22| < singularity_eps.
ScatteringAmplitudes amplitudes_from_matrix(const TransferMatrix& M,
                                            double singularity_eps = kSingularityEps);

// Inverse map: M22 = 1/T, M12 = R^r/T, M21 = -R^l/T, M11 = T - R^l R^r/T.
TransferMatrix matrix_from_amplitudes(const ScatteringAmplitudes& amp, double k);

// R^l = T^2 c / (R^r c - 1) with c = conj(R^r of v*). Throws DegenerateError
// when |R^r c - 1| < 1e-12.
cplx left_reflection_via_conjugate(const SampledPotential& pot, double k,
                                   double tol = kTransferTolerance);

// State of the (S0, S1) system at a_plus, with
//   S0' = -2ik z S1, S1' = i v/(2k z) S0, z = e^{-2ikx},
//   S0(a-) = e^{-2ik a-}, S1(a-) = 1.
// Then T = 1/S1(a+) and R^r = S0(a+)/S1(a+) - e^{-2ik a+}.
struct PathState {
  cplx S0;
  cplx S1;
  cplx left_integral;  // -(i/2k) int v e^{2ikx} / S1^2 dx, equals R^l
  double min_abs_S0;
  double min_abs_S1;
};
PathState integrate_path(const SampledPotential& pot, double k, double tol = kTransferTolerance);

// R^l from the path integral. Throws DegenerateError when |S0| or |S1| drops
// below 1e-10 along the path.
cplx left_reflection_integral(const SampledPotential& pot, double k, double tol = kTransferTolerance);

SampledPotential exponential_potential(const PotentialSpec& spec);
SampledPotential conjugate_potential(const SampledPotential& pot);

}  // namespace scatter1d
