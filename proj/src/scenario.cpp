#include "scatter1d/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "scatter1d/potential.hpp"

namespace scatter1d {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(where + "." + k, "unknown field");
}

double number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "required");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + "." + key, "must be finite");
  return d;
}

double number_or(const json& obj, const std::string& where, const char* key, double dflt) {
  return obj.contains(key) ? number(obj, where, key) : dflt;
}

int integer(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "required");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

int positive(const json& obj, const std::string& where, const char* key) {
  const int v = integer(obj, where, key);
  if (v < 1) fail(where + "." + key, "must be a positive integer");
  return v;
}

std::string text(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "required");
  if (!obj.at(key).is_string()) fail(where + "." + key, "expected a string");
  return obj.at(key).get<std::string>();
}

Side parse_side(const json& obj, const std::string& where) {
  const std::string s = text(obj, where, "side");
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  fail(where + ".side", "expected \"left\" or \"right\"");
}

ZeroSelector parse_zero(const json& obj, const std::string& where) {
  if (!obj.contains("zero")) fail(where + ".zero", "required");
  const json& z = obj.at("zero");
  if (z.is_string()) {
    if (z.get<std::string>() == "imaginary_pair") return ZeroSelector::imaginary_pair();
    fail(where + ".zero", "expected \"imaginary_pair\" or {\"real_index\": n}");
  }
  only_keys(z, where + ".zero", {"real_index"});
  return ZeroSelector::real(positive(z, where + ".zero", "real_index"));
}

DesignBlock parse_design(const json& obj, const std::string& where, bool extra_keys) {
  if (!extra_keys) only_keys(obj, where, {"gamma", "side", "zero"});
  DesignBlock d;
  d.gamma = number(obj, where, "gamma");
  if (!(d.gamma > 0.0)) fail(where + ".gamma", "must be positive");
  d.side = parse_side(obj, where);
  d.zero = parse_zero(obj, where);
  return d;
}

PotentialBlock parse_potential(const json& obj) {
  const std::string w = "potential";
  if (!obj.is_object()) fail(w, "expected an object");
  PotentialBlock p;
  const bool coupling = obj.contains("coupling_re") || obj.contains("coupling_im");
  const bool eps = obj.contains("eps0_re") || obj.contains("eps0_im");
  const bool design = obj.contains("design");
  if (int(coupling) + int(eps) + int(design) != 1)
    fail(w, "give exactly one of the coupling, eps0 or design forms");
  if (coupling) {
    only_keys(obj, w, {"coupling_re", "coupling_im", "m", "L_um"});
    p.coupling = cplx{number(obj, w, "coupling_re"), number_or(obj, w, "coupling_im", 0.0)};
  } else if (eps) {
    only_keys(obj, w, {"eps0_re", "eps0_im", "m", "L_um", "gamma"});
    p.eps0 = cplx{number(obj, w, "eps0_re"), number_or(obj, w, "eps0_im", 0.0)};
    p.gamma = number(obj, w, "gamma");
    if (!(*p.gamma > 0.0)) fail(w + ".gamma", "must be positive");
  } else {
    only_keys(obj, w, {"design", "m", "L_um"});
    const DesignBlock d = parse_design(obj.at("design"), w + ".design", false);
    const Design des = design_unidirectional(d.gamma, d.side, d.zero);
    p.eps0 = des.eps0;
    p.gamma = d.gamma;
  }
  p.m = positive(obj, w, "m");
  p.length_um = number(obj, w, "L_um");
  if (!(p.length_um > 0.0)) fail(w + ".L_um", "must be positive");
  return p;
}

SweepBlock parse_sweep(const json& obj) {
  const std::string w = "sweep";
  only_keys(obj, w, {"lambda_min_nm", "lambda_max_nm", "samples", "pin_design"});
  SweepBlock s;
  s.lambda_min_nm = number(obj, w, "lambda_min_nm");
  s.lambda_max_nm = number(obj, w, "lambda_max_nm");
  s.samples = positive(obj, w, "samples");
  if (!(s.lambda_min_nm > 0.0) || !(s.lambda_max_nm >= s.lambda_min_nm))
    fail(w, "need 0 < lambda_min_nm <= lambda_max_nm");
  if (obj.contains("pin_design")) {
    if (!obj.at("pin_design").is_boolean()) fail(w + ".pin_design", "expected a boolean");
    s.pin_design = obj.at("pin_design").get<bool>();
  }
  return s;
}

ClassifyBlock parse_classify(const json& obj) {
  const std::string w = "classify";
  only_keys(obj, w, {"gamma", "lambda_nm"});
  ClassifyBlock c;
  if (obj.contains("gamma") && obj.contains("lambda_nm")) fail(w, "give gamma or lambda_nm, not both");
  if (obj.contains("gamma")) c.gamma = number(obj, w, "gamma");
  if (obj.contains("lambda_nm")) c.lambda_nm = number(obj, w, "lambda_nm");
  if ((c.gamma && !(*c.gamma > 0.0)) || (c.lambda_nm && !(*c.lambda_nm > 0.0)))
    fail(w, "wavenumber must be positive");
  return c;
}

SingularityBlock parse_singularity(const json& obj) {
  const std::string w = "singularity";
  SingularityBlock s;
  const std::string mode = text(obj, w, "mode");
  if (mode == "integer") {
    only_keys(obj, w, {"mode", "n", "m"});
    s.mode = SingularityBlock::Mode::integer;
    s.n = positive(obj, w, "n");
    s.m = positive(obj, w, "m");
  } else if (mode == "general") {
    only_keys(obj, w, {"mode", "gamma", "m", "seed_re", "seed_im"});
    s.mode = SingularityBlock::Mode::general;
    s.gamma = number(obj, w, "gamma");
    s.m = positive(obj, w, "m");
    s.seed = {number(obj, w, "seed_re"), number(obj, w, "seed_im")};
    if (!(s.gamma > 0.0)) fail(w + ".gamma", "must be positive");
  } else if (mode == "half_integer") {
    only_keys(obj, w, {"mode", "p", "m"});
    s.mode = SingularityBlock::Mode::half_integer;
    s.p = integer(obj, w, "p");
    s.m = positive(obj, w, "m");
  } else if (mode == "scan") {
    only_keys(obj, w, {"mode", "m", "gamma_min", "gamma_max", "gamma_count", "re_min", "re_max",
                       "re_count", "im_min", "im_max", "im_count"});
    s.mode = SingularityBlock::Mode::scan;
    s.m = positive(obj, w, "m");
    s.gamma_min = number(obj, w, "gamma_min");
    s.gamma_max = number(obj, w, "gamma_max");
    s.gamma_count = positive(obj, w, "gamma_count");
    s.re_min = number(obj, w, "re_min");
    s.re_max = number(obj, w, "re_max");
    s.re_count = positive(obj, w, "re_count");
    s.im_min = number(obj, w, "im_min");
    s.im_max = number(obj, w, "im_max");
    s.im_count = positive(obj, w, "im_count");
    if (!(s.gamma_min > 0.0) || s.gamma_max < s.gamma_min) fail(w, "need 0 < gamma_min <= gamma_max");
  } else {
    fail(w + ".mode", "expected integer, general, half_integer or scan");
  }
  return s;
}

ValidateBlock parse_validate(const json& obj) {
  const std::string w = "validate";
  only_keys(obj, w, {"suite", "seed"});
  ValidateBlock v;
  if (obj.contains("suite")) v.suite = text(obj, w, "suite");
  if (v.suite != "bessel" && v.suite != "transfer" && v.suite != "analytic" && v.suite != "all")
    fail(w + ".suite", "expected bessel, transfer, analytic or all");
  if (obj.contains("seed")) {
    if (!obj.at("seed").is_number_unsigned()) fail(w + ".seed", "expected a non-negative integer");
    v.seed = obj.at("seed").get<std::uint64_t>();
  }
  return v;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  only_keys(doc, "scenario",
            {"schema_version", "potential", "sweep", "classify", "design", "singularity", "validate", "output"});
  if (doc.contains("schema_version")) {
    const json& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
      fail("scenario.schema_version", "unsupported (expected " + std::to_string(kSchemaVersion) + ")");
  }
  int blocks = 0;
  for (const char* k : {"sweep", "classify", "design", "singularity", "validate"}) blocks += doc.contains(k);
  if (blocks != 1) fail("scenario", "exactly one analysis block required, found " + std::to_string(blocks));

  Scenario sc;
  if (doc.contains("potential")) sc.potential = parse_potential(doc.at("potential"));
  if (doc.contains("sweep")) sc.analysis = parse_sweep(doc.at("sweep"));
  else if (doc.contains("classify")) sc.analysis = parse_classify(doc.at("classify"));
  else if (doc.contains("design")) sc.analysis = parse_design(doc.at("design"), "design", false);
  else if (doc.contains("singularity")) sc.analysis = parse_singularity(doc.at("singularity"));
  else sc.analysis = parse_validate(doc.at("validate"));

  const bool needs_potential = std::holds_alternative<SweepBlock>(sc.analysis) ||
                               std::holds_alternative<ClassifyBlock>(sc.analysis);
  if (needs_potential && !sc.potential) fail("potential", "required for " + analysis_name(sc.analysis));
  if (auto* c = std::get_if<ClassifyBlock>(&sc.analysis); c && !c->gamma && !c->lambda_nm &&
                                                           !sc.potential->gamma)
    fail("classify", "no wavenumber: give gamma, lambda_nm or a potential gamma");

  if (doc.contains("output")) {
    const json& o = doc.at("output");
    only_keys(o, "output", {"path", "format"});
    if (o.contains("path")) sc.output.path = text(o, "output", "path");
    if (o.contains("format")) {
      sc.output.format = text(o, "output", "format");
      if (*sc.output.format != "csv" && *sc.output.format != "json")
        fail("output.format", "expected csv or json");
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open scenario");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return parse_scenario(doc);
}

std::string analysis_name(const Analysis& a) {
  switch (a.index()) {
    case 0: return "sweep";
    case 1: return "classify";
    case 2: return "design";
    case 3: return "singularity";
    default: return "validate";
  }
}

std::optional<double> reference_k(const PotentialBlock& p) {
  if (!p.gamma) return std::nullopt;
  return *p.gamma * p.m * kPi / p.length_um;
}

PotentialSpec resolve_spec(const PotentialBlock& p, double k) {
  if (p.coupling) return make_spec(*p.coupling, p.m, p.length_um);
  return from_permittivity(*p.eps0, k, p.m, p.length_um);
}

SweepConfig sweep_config(const PotentialBlock& p, const SweepBlock& s) {
  SweepConfig cfg;
  cfg.m = p.m;
  cfg.length_um = p.length_um;
  cfg.lambda_min_nm = s.lambda_min_nm;
  cfg.lambda_max_nm = s.lambda_max_nm;
  cfg.samples = s.samples;
  if (p.coupling) {
    cfg.mode = SweepConfig::Mode::fixed_coupling;
    cfg.coupling = *p.coupling;
  } else {
    cfg.mode = SweepConfig::Mode::fixed_permittivity;
    cfg.eps0 = *p.eps0;
    if (s.pin_design && p.gamma) cfg.pinned_nm = {design_wavelength(*p.gamma, p.m, p.length_um) * 1e3};
  }
  return cfg;
}

}  // namespace scatter1d
