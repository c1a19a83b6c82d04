#pragma once

// Scenario files for the command-line tool.
//
// {
//   "schema_version": 1,
//   "potential": {"coupling_re": .., "coupling_im": .., "m": .., "L_um": ..}
//              | {"eps0_re": .., "eps0_im": .., "m": .., "L_um": .., "gamma": ..}
//              | {"design": {"gamma": .., "side": "left"|"right",
//                            "zero": "imaginary_pair" | {"real_index": n}},
//                 "m": .., "L_um": ..},
//   one of
//   "sweep":       {"lambda_min_nm", "lambda_max_nm", "samples", "pin_design": true}
//   "classify":    {"gamma": ..} | {"lambda_nm": ..}      (default: potential gamma)
//   "design":      {"gamma", "side", "zero"}
//   "singularity": {"mode": "integer", "n", "m"}
//                | {"mode": "general", "gamma", "m", "seed_re", "seed_im"}
//                | {"mode": "half_integer", "p", "m"}
//                | {"mode": "scan", "m", "gamma_min", "gamma_max", "gamma_count",
//                   "re_min", "re_max", "re_count", "im_min", "im_max", "im_count"}
//   "validate":    {"suite": "bessel"|"transfer"|"analytic"|"all", "seed": n}
//   "output": {"path": "..", "format": "csv"|"json"}   (optional)
// }
//
// coupling is in um^-2 and lambda in nm; "gamma" in the eps0 form is the
// reference k/k0 at which eps0 is specified.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "scatter1d/invisibility.hpp"
#include "scatter1d/types.hpp"

namespace scatter1d {

inline constexpr int kSchemaVersion = 1;

class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PotentialBlock {
  int m = 1;
  double length_um = 1.0;
  std::optional<cplx> coupling;  // coupling form
  std::optional<cplx> eps0;      // eps0 and design forms
  std::optional<double> gamma;   // eps0 and design forms
};

struct SweepBlock {
  double lambda_min_nm = 0.0;
  double lambda_max_nm = 0.0;
  int samples = 0;
  bool pin_design = true;
};

struct ClassifyBlock {
  std::optional<double> gamma;
  std::optional<double> lambda_nm;
};

struct DesignBlock {
  double gamma = 0.0;
  Side side = Side::left;
  ZeroSelector zero;
};

struct SingularityBlock {
  enum class Mode { integer, general, half_integer, scan } mode = Mode::integer;
  int n = 1;
  int m = 1;
  int p = 0;
  double gamma = 0.0;
  cplx seed;
  double gamma_min = 0.0, gamma_max = 0.0;
  int gamma_count = 1;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  int re_count = 1, im_count = 1;
};

struct ValidateBlock {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
};

using Analysis = std::variant<SweepBlock, ClassifyBlock, DesignBlock, SingularityBlock, ValidateBlock>;

struct OutputBlock {
  std::optional<std::string> path;
  std::optional<std::string> format;  // "csv" or "json"
};

struct Scenario {
  std::optional<PotentialBlock> potential;
  Analysis analysis;
  OutputBlock output;
};

// Throws SchemaError with a field path on any violation.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

std::string analysis_name(const Analysis& a);

// Potential block resolved against a wavenumber k (um^-1).
PotentialSpec resolve_spec(const PotentialBlock& p, double k);
// Reference wavenumber of the eps0 and design forms: gamma k0.
std::optional<double> reference_k(const PotentialBlock& p);

// Sweep configuration for a potential block.
SweepConfig sweep_config(const PotentialBlock& p, const SweepBlock& s);

}  // namespace scatter1d
