#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "scatter1d/output.hpp"
#include "scatter1d/scenario.hpp"
#include "scatter1d/singularity.hpp"
#include "scatter1d/validation.hpp"

using namespace scatter1d;
using nlohmann::json;

namespace {

json slab() {
  return json::parse(R"({
    "schema_version": 1,
    "potential": {"eps0_re": 1.006142616812, "eps0_im": 0.0, "m": 243, "L_um": 260.0, "gamma": 2.0062},
    "sweep": {"lambda_min_nm": 1050.0, "lambda_max_nm": 1080.0, "samples": 2000}
  })");
}

std::string schema_message(const json& doc) {
  try {
    (void)parse_scenario(doc);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("sweep scenario") {
  const auto sc = parse_scenario(slab());
  REQUIRE(sc.potential.has_value());
  CHECK(sc.potential->m == 243);
  CHECK(analysis_name(sc.analysis) == "sweep");
  const auto cfg = sweep_config(*sc.potential, std::get<SweepBlock>(sc.analysis));
  CHECK(cfg.mode == SweepConfig::Mode::fixed_permittivity);
  REQUIRE(cfg.pinned_nm.size() == 1);
  CHECK(cfg.pinned_nm[0] == doctest::Approx(1066.652226).epsilon(1e-9));

  auto doc = slab();
  doc["sweep"]["pin_design"] = false;
  CHECK(sweep_config(*sc.potential, std::get<SweepBlock>(parse_scenario(doc).analysis)).pinned_nm.empty());
}

TEST_CASE("potential forms") {
  const auto c = parse_scenario(json::parse(R"({
    "potential": {"coupling_re": 0.5, "coupling_im": -0.25, "m": 2, "L_um": 3.0},
    "classify": {"gamma": 1.3}})"));
  CHECK(*c.potential->coupling == cplx{0.5, -0.25});
  CHECK_FALSE(reference_k(*c.potential).has_value());
  const auto spec = resolve_spec(*c.potential, 1.0);
  CHECK(spec.coupling == cplx{0.5, -0.25});

  const auto d = parse_scenario(json::parse(R"({
    "potential": {"design": {"gamma": 2.0062, "side": "left", "zero": "imaginary_pair"}, "m": 243, "L_um": 260.0},
    "classify": {}})"));
  REQUIRE(d.potential->eps0.has_value());
  CHECK(std::abs(*d.potential->eps0 - 1.006142617) < 1e-6);
  CHECK(*d.potential->gamma == 2.0062);
  const double k = *reference_k(*d.potential);
  CHECK(k == doctest::Approx(2.0062 * 243 * kPi / 260.0));

  const auto r = parse_scenario(json::parse(R"({
    "design": {"gamma": 1.0, "side": "right", "zero": {"real_index": 2}}})"));
  const auto& db = std::get<DesignBlock>(r.analysis);
  CHECK(db.side == Side::right);
  CHECK(db.zero.axis == ZeroSelector::Axis::real);
  CHECK(db.zero.index == 2);
}

TEST_CASE("schema errors name the field") {
  auto doc = slab();
  doc["potential"]["colour"] = "red";
  CHECK(schema_message(doc).find("potential.colour") != std::string::npos);

  doc = slab();
  doc["schema_version"] = 2;
  CHECK(schema_message(doc).find("schema_version") != std::string::npos);

  doc = slab();
  doc["classify"] = json::object();
  CHECK(schema_message(doc).find("exactly one") != std::string::npos);

  doc = slab();
  doc["potential"].erase("m");
  CHECK(schema_message(doc).find("potential.m") != std::string::npos);

  doc = slab();
  doc["potential"]["m"] = 0;
  CHECK(schema_message(doc).find("potential.m") != std::string::npos);

  doc = slab();
  doc["potential"]["m"] = 2.5;
  CHECK_FALSE(schema_message(doc).empty());

  doc = slab();
  doc["potential"]["coupling_re"] = 1.0;
  CHECK(schema_message(doc).find("exactly one of") != std::string::npos);

  doc = slab();
  doc["sweep"]["lambda_max_nm"] = 900.0;
  CHECK_FALSE(schema_message(doc).empty());

  doc = slab();
  doc.erase("potential");
  CHECK(schema_message(doc).find("potential") != std::string::npos);

  doc = slab();
  doc["output"] = {{"format", "xml"}};
  CHECK(schema_message(doc).find("output.format") != std::string::npos);

  CHECK_FALSE(schema_message(json::parse(R"({"singularity": {"mode": "bogus"}})")).empty());
  CHECK_FALSE(schema_message(json::parse(R"({"validate": {"suite": "everything"}})")).empty());
  CHECK_FALSE(schema_message(json::parse(R"({"validate": {"seed": -3}})")).empty());
  CHECK_FALSE(schema_message(json::array()).empty());
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), SchemaError);
}

TEST_CASE("malformed file") {
  const std::string path = "test_scenario_malformed.json";
  {
    std::ofstream(path) << "{ \"validate\": ";
  }
  CHECK_THROWS_AS(load_scenario(path), SchemaError);
  std::remove(path.c_str());
}

TEST_CASE("singularity modes") {
  const auto s = parse_scenario(json::parse(R"({"singularity": {"mode": "general", "gamma": 0.5, "m": 3,
    "seed_re": 0.0, "seed_im": 1.0}})"));
  const auto& b = std::get<SingularityBlock>(s.analysis);
  CHECK(b.mode == SingularityBlock::Mode::general);
  CHECK(b.seed == cplx{0.0, 1.0});
  const auto h = parse_scenario(json::parse(R"({"singularity": {"mode": "half_integer", "p": 0, "m": 1}})"));
  CHECK(std::get<SingularityBlock>(h.analysis).mode == SingularityBlock::Mode::half_integer);
}

TEST_CASE("csv output") {
  std::vector<SweepRow> rows{{1050.0, 0.1, 1.0 / 3.0, 0.0}, {1066.652226, 1e-17, 2e-3, 3.7e-22}};
  const std::string csv = sweep_csv(rows);
  CHECK(csv.rfind(std::string(kSweepHeader) + "\r\n", 0) == 0);
  CHECK(csv.find("1050,0.10000000000000001,0.33333333333333331,0\r\n") != std::string::npos);
  CHECK(csv.find('\n') == csv.find("\r\n") + 1);
  // every value round-trips
  const auto second = csv.find("\r\n", csv.find("\r\n") + 2) + 2;
  const std::string line = csv.substr(second, csv.find("\r\n", second) - second);
  double l, a, b, c;
  REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &l, &a, &b, &c) == 4);
  CHECK(l == rows[1].lambda_nm);
  CHECK(a == rows[1].abs_R_left);
  CHECK(c == rows[1].abs_T_minus_1);
}

TEST_CASE("json output") {
  const std::vector<SweepRow> rows{{1050.0, 0.1, 1.0 / 3.0, 0.0}};
  const auto doc = sweep_json(rows);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["kind"] == "sweep");
  CHECK(doc["rows"][0][2].get<double>() == 1.0 / 3.0);
  CHECK(json::parse(dump(doc)) == doc);

  const auto s = singularity_json({solve_integer_gamma(1, 100)});
  CHECK(s["kind"] == "singularity");
  CHECK(s["singularities"].size() == 1);
  CHECK(s["singularities"][0]["a_re"].get<double>() == doctest::Approx(0.174004434).epsilon(1e-8));
  CHECK_FALSE(s["singularities"][0].contains("ode_abs_M22"));

  const auto n = no_solution_json("mu vanishes", 0.5, 2);
  CHECK(n["singularities"].empty());
  CHECK(n["no_solution"]["m"] == 2);

  const auto v = validation_json(run_suite(Suite::bessel));
  CHECK(v["passed"] == true);
  CHECK(v["suites"][0]["suite"] == "bessel");
}

TEST_CASE("output is deterministic") {
  const auto sc = parse_scenario(slab());
  const auto cfg = sweep_config(*sc.potential, std::get<SweepBlock>(sc.analysis));
  CHECK(sweep_csv(wavelength_sweep(cfg)) == sweep_csv(wavelength_sweep(cfg)));
  CHECK(dump(validation_json(run_suite(Suite::analytic, 7))) == dump(validation_json(run_suite(Suite::analytic, 7))));
  const std::string text = validation_text(run_suite(Suite::transfer));
  CHECK(text.rfind("suite transfer  seed 0x5EED\n", 0) == 0);
  CHECK(text.find("FAIL") == std::string::npos);
}
