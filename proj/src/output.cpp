#include "scatter1d/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "scatter1d/scenario.hpp"

namespace scatter1d {
namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json envelope(const char* kind) { return json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

char format_bound(const PropertyResult& p) { return p.worst_is_minimum ? '>' : '<'; }

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\r\n";
  for (const SweepRow& r : rows)
    out += g17(r.lambda_nm) + "," + g17(r.abs_R_left) + "," + g17(r.abs_R_right) + "," +
           g17(r.abs_T_minus_1) + "\r\n";
  return out;
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json doc = envelope("sweep");
  doc["columns"] = {"lambda_nm", "abs_R_left", "abs_R_right", "abs_T_minus_1"};
  json data = json::array();
  for (const SweepRow& r : rows) data.push_back({r.lambda_nm, r.abs_R_left, r.abs_R_right, r.abs_T_minus_1});
  doc["rows"] = std::move(data);
  return doc;
}

json singularity_json(const std::vector<SingularitySolution>& roots) {
  json doc = envelope("singularity");
  json arr = json::array();
  for (const auto& s : roots) {
    json row{{"gamma", s.gamma},
             {"m", s.m},
             {"a_re", s.a_frak.real()},
             {"a_im", s.a_frak.imag()},
             {"eps0_re", s.eps0.real()},
             {"eps0_im", s.eps0.imag()},
             {"residual", s.residual}};
    if (s.ode_abs_m22) row["ode_abs_M22"] = *s.ode_abs_m22;
    arr.push_back(std::move(row));
  }
  doc["singularities"] = std::move(arr);
  return doc;
}

json no_solution_json(const std::string& reason, double gamma, int m) {
  json doc = singularity_json({});
  doc["no_solution"] = {{"gamma", gamma}, {"m", m}, {"reason", reason}};
  return doc;
}

json verdict_json(const InvisibilityVerdict& v, double gamma, cplx a, int m) {
  json doc = envelope("classify");
  doc["gamma"] = gamma;
  doc["m"] = m;
  doc["a_re"] = a.real();
  doc["a_im"] = a.imag();
  doc["verdict"] = to_string(v.kind);
  doc["predicted"] = to_string(v.predicted);
  doc["mechanism"] = to_string(v.mechanism);
  doc["witnesses"] = {{"abs_R_left", v.witnesses.abs_R_left},
                      {"abs_R_right", v.witnesses.abs_R_right},
                      {"abs_T_minus_1", v.witnesses.abs_T_minus_1}};
  doc["inconsistency"] = v.inconsistency ? *v.inconsistency : json(nullptr);
  return doc;
}

std::string verdict_text(const InvisibilityVerdict& v) {
  std::string out = to_string(v.kind) + "\n";
  out += "mechanism: " + to_string(v.mechanism) + "\n";
  out += "|R_left| = " + g17(v.witnesses.abs_R_left) + "\n";
  out += "|R_right| = " + g17(v.witnesses.abs_R_right) + "\n";
  out += "|T - 1| = " + g17(v.witnesses.abs_T_minus_1) + "\n";
  if (v.inconsistency) out += "inconsistent: " + v.inconsistency->dump() + "\n";
  return out;
}

json design_json(const Design& d, std::optional<double> wavelength_nm) {
  json doc = envelope("design");
  doc["gamma"] = d.gamma;
  doc["side"] = d.side == Side::left ? "left" : "right";
  doc["order"] = d.order;
  doc["a_re"] = d.a_frak.real();
  doc["a_im"] = d.a_frak.imag();
  doc["eps0_re"] = d.eps0.real();
  doc["eps0_im"] = d.eps0.imag();
  doc["design_lambda_nm"] = wavelength_nm ? json(*wavelength_nm) : json(nullptr);
  return doc;
}

json validation_json(const std::vector<SuiteReport>& reports) {
  json doc = envelope("validate");
  bool all = true;
  json suites = json::array();
  for (const auto& r : reports) {
    json props = json::array();
    for (const auto& p : r.properties)
      props.push_back({{"name", p.name},
                       {"asserted", p.asserted},
                       {"passed", p.passed},
                       {"worst", p.worst},
                       {"bound", p.bound},
                       {"relation", std::string(1, format_bound(p))},
                       {"samples", p.samples}});
    suites.push_back({{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"properties", props}});
    all = all && r.passed();
  }
  doc["passed"] = all;
  doc["suites"] = std::move(suites);
  return doc;
}

std::string validation_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  char line[512];
  bool all = true;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "suite %s  seed 0x%llX\n", r.suite.c_str(),
                  static_cast<unsigned long long>(r.seed));
    out += line;
    for (const auto& p : r.properties) {
      const char* tag = !p.asserted ? "INFO" : (p.passed ? "PASS" : "FAIL");
      std::snprintf(line, sizeof line, "  %s  %-66s %.3e %c %.1e  (n=%d)\n", tag, p.name.c_str(), p.worst,
                    format_bound(p), p.bound, p.samples);
      out += line;
    }
    all = all && r.passed();
  }
  out += all ? "all properties hold\n" : "FAILED\n";
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace scatter1d
