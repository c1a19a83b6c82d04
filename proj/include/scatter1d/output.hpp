#pragma once

// Deterministic serialisation of results. CSV uses 17 significant digits and
// CRLF line endings; JSON documents are objects carrying schema_version, with
// doubles in shortest round-trip form.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter1d/invisibility.hpp"
#include "scatter1d/singularity.hpp"
#include "scatter1d/validation.hpp"

namespace scatter1d {

inline constexpr const char* kSweepHeader = "lambda_nm,abs_R_left,abs_R_right,abs_T_minus_1";

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

nlohmann::json singularity_json(const std::vector<SingularitySolution>& roots);
// Empty result with the reason no solution exists.
nlohmann::json no_solution_json(const std::string& reason, double gamma, int m);

nlohmann::json verdict_json(const InvisibilityVerdict& v, double gamma, cplx a_frak, int m);
std::string verdict_text(const InvisibilityVerdict& v);

nlohmann::json design_json(const Design& d, std::optional<double> wavelength_nm);

nlohmann::json validation_json(const std::vector<SuiteReport>& reports);
std::string validation_text(const std::vector<SuiteReport>& reports);

// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

// Writes to path, or to stdout when path is empty. Throws std::runtime_error.
void write_text(const std::string& path, const std::string& content);

}  // namespace scatter1d
