#pragma once

// The truncated exponential potential v(x) = z exp(-2 i k0 x) on [0, L] with
// k0 = m pi / L, and the dimensionless quantities derived from it at a given
// wavenumber. The library is unit-agnostic: only products such as k L matter.

#include "scatter1d/types.hpp"

namespace scatter1d {

// |gamma - round(gamma)| below this declares gamma an integer.
inline constexpr double kIntegerSnap = 1e-9;

struct PotentialSpec {
  cplx coupling;  // z, in units of wavenumber squared
  int m = 1;      // number of periods on the support
  double length = 1.0;

  double k0() const { return m * kPi / length; }
};

// Validates m >= 1, L > 0 and finite coupling; throws DomainError otherwise.
PotentialSpec make_spec(cplx coupling, int m, double length);

struct WaveContext {
  double k = 0.0;
  double gamma = 0.0;      // k / k0
  cplx a_frak;             // sqrt(z) / k0, principal branch
  cplx mu;                 // (1 - e^{2 pi i m gamma}) / (2 i sin(pi gamma))
  bool gamma_is_integer = false;
  int integer_gamma = 0;   // the matched n when gamma_is_integer
  bool mu_vanishes = false;  // k L in pi Z with gamma not an integer
  int m = 1;
  double kL = 0.0;
};

WaveContext wave_context(const PotentialSpec& spec, double k, double integer_snap_eps = kIntegerSnap);

// Interference factor mu(gamma, m), evaluated from the offsets of gamma and
// m*gamma to their nearest integers so that neither the integer limit
// (-1)^{n+1} m nor the zeros at m*gamma in Z lose digits.
cplx interference_factor(double gamma, int m, double integer_snap_eps = kIntegerSnap);

cplx evaluate_potential(const PotentialSpec& spec, double x);

// sqrt with arg in (-pi/2, pi/2]; a negative real input maps to +i sqrt|z|
// regardless of the sign of its zero imaginary part.
cplx principal_sqrt(cplx z);

struct PermittivityProfile {
  cplx eps0;
  double k0 = 0.0;
  double length = 0.0;

  // eps(x) = 1 + (eps0 - 1) e^{-2 i k0 x} on [0, L], 1 elsewhere.
  cplx at(double x) const;
};

PermittivityProfile permittivity(const PotentialSpec& spec, double k);

// z = k^2 (1 - eps0).
PotentialSpec from_permittivity(cplx eps0, double k, int m, double length);

}  // namespace scatter1d
