#pragma once

// Invisibility verdicts for the truncated exponential potential and designs
// that realise them from Bessel zeros.
//
// Nomenclature: "left-invisible" means invisible for waves incident from the
// left, R^l = 0 and T = 1.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter1d/bessel.hpp"
#include "scatter1d/kernels.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {

inline constexpr double kVerdictEpsAnalytic = 1e-9;
inline constexpr double kVerdictEpsNumeric = 1e-6;

enum class VerdictKind { bidirectional, left_only, right_only, visible };
enum class Mechanism { mu_zero, bessel_zero_right, bessel_zero_left, none };

std::string to_string(VerdictKind kind);
std::string to_string(Mechanism mech);
// left_only <-> right_only, others unchanged.
VerdictKind mirror(VerdictKind kind);

struct Witnesses {
  double abs_R_left = 0.0;
  double abs_R_right = 0.0;
  double abs_T_minus_1 = 0.0;
};

struct InvisibilityVerdict {
  VerdictKind kind = VerdictKind::visible;  // from the witnesses
  Witnesses witnesses;
  Mechanism mechanism = Mechanism::none;    // from mu and the Bessel zeros
  VerdictKind predicted = VerdictKind::visible;
  // Set when predicate and witnesses disagree beyond 10 verdict_eps: gamma, a,
  // mu, the Bessel values and the amplitudes.
  std::optional<nlohmann::json> inconsistency;
};

// Witness-only verdict, e.g. for amplitudes from the transfer engine.
VerdictKind verdict_from_witnesses(const Witnesses& w, double verdict_eps);
Witnesses witnesses_of(const ScatteringAmplitudes& amp);

// Predicate: mu = 0 -> bidirectional; J_{gamma+1}(a) = 0 -> right-invisible;
// J_{1-gamma}(a) = 0 -> left-invisible (zeros judged relative to the
// neighbouring orders). Witnesses from the closed forms. Never throws on
// disagreement; fills `inconsistency` instead.
InvisibilityVerdict classify(const WaveContext& ctx, double verdict_eps = kVerdictEpsAnalytic);

InvisibilityVerdict classify_amplitudes(const ScatteringAmplitudes& amp,
                                        double verdict_eps = kVerdictEpsNumeric);

enum class Side { left, right };

struct ZeroSelector {
  enum class Axis { real, imaginary_pair } axis = Axis::real;
  int index = 1;  // 1-based, real axis only

  static ZeroSelector real(int index) { return {Axis::real, index}; }
  static ZeroSelector imaginary_pair() { return {Axis::imaginary_pair, 1}; }
};

struct Design {
  double gamma;
  Side side;
  double order;  // gamma + 1 (right) or 1 - gamma (left)
  cplx a_frak;   // the chosen zero; +iy for the imaginary pair
  cplx eps0;     // 1 - a^2 / gamma^2
};

// Throws NoSolutionError when the requested imaginary pair does not exist.
Design design_unidirectional(double gamma, Side side, ZeroSelector selector);

// Wavelength (same length unit as L) at which gamma = k/k0: 2L/(gamma m).
double design_wavelength(double gamma, int m, double length);

struct SweepConfig {
  enum class Mode { fixed_permittivity, fixed_coupling } mode = Mode::fixed_permittivity;
  cplx eps0{1.0, 0.0};     // used with fixed_permittivity
  cplx coupling{0.0, 0.0}; // 1/um^2, used with fixed_coupling
  int m = 1;
  double length_um = 1.0;
  double lambda_min_nm = 0.0;
  double lambda_max_nm = 0.0;
  int samples = 0;         // evenly spaced, endpoints included
  std::vector<double> pinned_nm;  // extra wavelengths merged into the grid
};

struct SweepRow {
  double lambda_nm;
  double abs_R_left;
  double abs_R_right;
  double abs_T_minus_1;
};

// Closed-form amplitudes over the wavelength grid, sorted by wavelength.
// A wavelength landing on a spectral singularity throws
// SpectralSingularityError naming it.
std::vector<SweepRow> wavelength_sweep(const SweepConfig& cfg, Execution exec = Execution::parallel);

// Left-invisible slab built on the imaginary zero of J_{1-gamma}: eps0 from
// the refined zero, design wavelength 2L/(gamma m) pinned into the grid.
SweepConfig left_invisible_slab(double gamma, int m, double length_um, double lambda_min_nm,
                                double lambda_max_nm, int samples);

}  // namespace scatter1d
