#pragma once

// Closed-form scattering data of the truncated exponential potential in terms
// of Bessel functions of argument a = sqrt(z)/k0 and orders built from
// gamma = k/k0.

#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {

inline constexpr double kAnalyticSingularityEps = 1e-10;
inline constexpr double kQualityDegeneracy = 1e-14;

// (S0, S1) at x = L for the path system with S0(0) = S1(0) = 1. For a = 0
// this is (e^{-2ikL}, 1); for mu = 0 it is (1, 1).
struct BoundaryValues {
  cplx S0_L;
  cplx S1_L;
};

BoundaryValues boundary_values(const WaveContext& ctx);

// Denominator 2 gamma - i pi a^2 mu J_{1-gamma}(a) J_{gamma+1}(a); T = 2 gamma / den.
// Integer gamma uses the limit 2n - i pi m a^2 J_{n-1} J_{n+1}.
cplx transmission_denominator(const WaveContext& ctx);

// R^l, R^r, T and R^r of the conjugate potential. Throws
// SpectralSingularityError when |den| < singularity_eps.
ScatteringAmplitudes amplitudes_analytic(const WaveContext& ctx,
                                         double singularity_eps = kAnalyticSingularityEps);

// Amplitudes of the complex-conjugate potential v*(x) = conj(z) e^{2 i k0 x}
// on [0, L], from the same Bessel products: T_{v*} = conj(2 gamma / cden),
// R^r_{v*} from the closed form, R^l_{v*} by the conjugate-potential relation
// with the roles of v and v* swapped.
ScatteringAmplitudes amplitudes_conjugate_analytic(const WaveContext& ctx,
                                                   double singularity_eps = kAnalyticSingularityEps);

// T - 1 without cancellation.
cplx transmission_deficit(const WaveContext& ctx);

// Leading small-a behaviour at integer gamma = n (throws DomainError otherwise):
//   R^r ~ -i pi m a^{2n+4} / (2^{2n+3} n ((n+1)!)^2)
//   T-1 ~  i pi m a^{2n+2} / (2^{2n+1} n! (n+1)!)
//   R^l ~ -i pi m a^{2n}   / (2^{2n-1} n ((n-1)!)^2)
// with a^2 = z/k0^2.
ScatteringAmplitudes amplitudes_perturbative(const WaveContext& ctx);

struct QualityRatios {
  double ratio_rr;  // |R^r / R^l|
  double ratio_t;   // |(T - 1) / R^l|
};

// Integer gamma only. Throws DegenerateError when |R^l| < 1e-14.
QualityRatios invisibility_quality(const WaveContext& ctx);

}  // namespace scatter1d
