// scatter1d: sweeps, verdicts, designs and spectral singularities of the
// truncated exponential potential.
//
// exit codes: 0 ok, 1 validation failure, 2 bad input (including a design with
// no zero), 3 numerical failure,
// 4 invisibility predicate and amplitudes disagree

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scatter1d/analytic.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/invisibility.hpp"
#include "scatter1d/output.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/scenario.hpp"
#include "scatter1d/singularity.hpp"
#include "scatter1d/validation.hpp"

using namespace scatter1d;

namespace {

constexpr int kExitValidate = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInconsistent = 4;

struct Options {
  std::string scenario;
  std::string out;
  std::string seed;
  bool json = false;
  bool table1 = false;
  // design without a scenario
  double gamma = 0.0;
  std::string side = "left";
  std::string zero = "imaginary_pair";
  std::string suite = "all";
};

std::string out_path(const Options& o, const Scenario* sc) {
  if (!o.out.empty()) return o.out;
  if (sc && sc->output.path) return *sc->output.path;
  return {};
}

Scenario require_scenario(const Options& o, const char* command) {
  if (o.scenario.empty()) throw SchemaError(std::string(command) + ": --scenario is required");
  Scenario sc = load_scenario(o.scenario);
  if (analysis_name(sc.analysis) != command)
    throw SchemaError(o.scenario + ": scenario holds a " + analysis_name(sc.analysis) +
                      " block, not " + command);
  return sc;
}

std::uint64_t parse_seed(const std::string& s) {
  if (s.empty()) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError("--seed: expected a non-negative integer, got '" + s + "'");
  }
}

int cmd_sweep(const Options& o) {
  const Scenario sc = require_scenario(o, "sweep");
  const SweepConfig cfg = sweep_config(*sc.potential, std::get<SweepBlock>(sc.analysis));
  const auto rows = wavelength_sweep(cfg);
  const bool as_json = o.json || (sc.output.format && *sc.output.format == "json");
  write_text(out_path(o, &sc), as_json ? dump(sweep_json(rows)) : sweep_csv(rows));
  return 0;
}

int cmd_singularity(const Options& o) {
  if (o.table1) {
    std::vector<SingularitySolution> rows;
    for (int m : {100, 250, 500}) {
      SingularitySolution s = solve_integer_gamma(1, m);
      s.ode_abs_m22 = verify_with_ode(s);
      rows.push_back(s);
    }
    write_text(o.out, dump(singularity_json(rows)));
    return 0;
  }
  const Scenario sc = require_scenario(o, "singularity");
  const auto& b = std::get<SingularityBlock>(sc.analysis);
  std::vector<SingularitySolution> rows;
  double gamma = b.gamma;
  try {
    switch (b.mode) {
      case SingularityBlock::Mode::integer:
        gamma = b.n;
        rows.push_back(solve_integer_gamma(b.n, b.m));
        break;
      case SingularityBlock::Mode::general:
        rows.push_back(solve_general(b.gamma, b.m, b.seed));
        break;
      case SingularityBlock::Mode::half_integer:
        gamma = b.p + 0.5;
        rows.push_back(solve_half_integer(b.p, b.m));
        break;
      case SingularityBlock::Mode::scan: {
        ScanGrid g;
        g.m = b.m;
        g.gamma_min = b.gamma_min;
        g.gamma_max = b.gamma_max;
        g.gamma_count = b.gamma_count;
        g.re_min = b.re_min;
        g.re_max = b.re_max;
        g.re_count = b.re_count;
        g.im_min = b.im_min;
        g.im_max = b.im_max;
        g.im_count = b.im_count;
        rows = scan_singularities(g);
        break;
      }
    }
  } catch (const NoSolutionError& e) {
    write_text(out_path(o, &sc), dump(no_solution_json(e.what(), gamma, b.m)));
    return 0;
  }
  if (b.mode != SingularityBlock::Mode::scan)
    for (auto& s : rows) s.ode_abs_m22 = verify_with_ode(s);
  write_text(out_path(o, &sc), dump(singularity_json(rows)));
  return 0;
}

int cmd_classify(const Options& o) {
  const Scenario sc = require_scenario(o, "classify");
  const PotentialBlock& p = *sc.potential;
  const auto& c = std::get<ClassifyBlock>(sc.analysis);
  const double k0 = p.m * kPi / p.length_um;
  double k = 0.0;
  if (c.gamma) k = *c.gamma * k0;
  else if (c.lambda_nm) k = 2.0 * kPi / (*c.lambda_nm * 1e-3);
  else k = *reference_k(p);
  const WaveContext ctx = wave_context(resolve_spec(p, k), k);
  const InvisibilityVerdict v = classify(ctx);
  const bool as_json = o.json || (sc.output.format && *sc.output.format == "json");
  write_text(out_path(o, &sc), as_json ? dump(verdict_json(v, ctx.gamma, ctx.a_frak, ctx.m)) : verdict_text(v));
  if (v.inconsistency) {
    std::cerr << "scatter1d: predicate and amplitudes disagree: " << v.inconsistency->dump() << "\n";
    return kExitInconsistent;
  }
  return 0;
}

ZeroSelector zero_from_flag(const std::string& z) {
  if (z == "imaginary_pair" || z == "imaginary") return ZeroSelector::imaginary_pair();
  try {
    const int idx = std::stoi(z);
    if (idx >= 1) return ZeroSelector::real(idx);
  } catch (const std::exception&) {
  }
  throw SchemaError("--zero: expected imaginary_pair or a positive real-zero index");
}

int cmd_design(const Options& o) {
  DesignBlock d;
  const Scenario* scp = nullptr;
  std::optional<Scenario> sc;
  if (!o.scenario.empty()) {
    sc = require_scenario(o, "design");
    scp = &*sc;
    d = std::get<DesignBlock>(sc->analysis);
  } else {
    if (!(o.gamma > 0.0)) throw SchemaError("design: give --scenario or --gamma");
    d.gamma = o.gamma;
    if (o.side != "left" && o.side != "right") throw SchemaError("--side: expected left or right");
    d.side = o.side == "left" ? Side::left : Side::right;
    d.zero = zero_from_flag(o.zero);
  }
  const Design des = design_unidirectional(d.gamma, d.side, d.zero);
  std::optional<double> lambda_nm;
  if (sc && sc->potential) lambda_nm = design_wavelength(d.gamma, sc->potential->m, sc->potential->length_um) * 1e3;
  const bool as_json = o.json || (scp && scp->output.format && *scp->output.format == "json");
  if (as_json) {
    write_text(out_path(o, scp), dump(design_json(des, lambda_nm)));
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "order %.17g\na %.17g%+.17gi\neps0 %.17g%+.17gi\n", des.order, des.a_frak.real(),
                  des.a_frak.imag(), des.eps0.real(), des.eps0.imag());
    write_text(out_path(o, scp), buf);
  }
  return 0;
}

int cmd_validate(const Options& o) {
  std::string suite = o.suite;
  std::optional<std::uint64_t> seed;
  const Scenario* scp = nullptr;
  std::optional<Scenario> sc;
  if (!o.scenario.empty()) {
    sc = require_scenario(o, "validate");
    scp = &*sc;
    const auto& v = std::get<ValidateBlock>(sc->analysis);
    suite = v.suite;
    seed = v.seed;
  }
  if (!o.seed.empty()) seed = parse_seed(o.seed);
  const auto reports = run_suite(parse_suite(suite), seed.value_or(kDefaultSeed));
  const bool as_json = o.json || (scp && scp->output.format && *scp->output.format == "json");
  std::string text = as_json ? dump(validation_json(reports)) : validation_text(reports);
  write_text(out_path(o, scp), text);
  for (const auto& r : reports)
    if (!r.passed()) return kExitValidate;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scatter1d: scattering by the truncated exponential potential"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario, "scenario JSON file");
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_flag("--json", o.json, "machine-readable JSON output");
    sub->add_option("--seed", o.seed, "RNG seed for property ensembles");
  };
  auto* sweep = app.add_subcommand("sweep", "wavelength sweep of |R_left|, |R_right|, |T-1|");
  add_common(sweep);
  auto* sing = app.add_subcommand("singularity", "spectral singularities");
  add_common(sing);
  sing->add_flag("--table1", o.table1, "integer gamma = 1 roots for m = 100, 250, 500");
  auto* cls = app.add_subcommand("classify", "invisibility verdict at one wavenumber");
  add_common(cls);
  auto* des = app.add_subcommand("design", "unidirectionally invisible design from a Bessel zero");
  add_common(des);
  des->add_option("--gamma", o.gamma, "k / k0");
  des->add_option("--side", o.side, "left or right");
  des->add_option("--zero", o.zero, "imaginary_pair or a 1-based real zero index");
  auto* val = app.add_subcommand("validate", "property suites");
  add_common(val);
  val->add_option("suite", o.suite, "bessel, transfer, analytic or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*sweep) return cmd_sweep(o);
    if (*sing) return cmd_singularity(o);
    if (*cls) return cmd_classify(o);
    if (*des) return cmd_design(o);
    return cmd_validate(o);
  } catch (const SchemaError& e) {
    std::cerr << "scatter1d: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "scatter1d: " << e.what() << "\n";
    return kExitInput;
  } catch (const NoSolutionError& e) {
    std::cerr << "scatter1d: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "scatter1d: numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
