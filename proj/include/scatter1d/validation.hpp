#pragma once

// Property suites over random and structured ensembles. Each property records
// its worst observed value against a bound; reporting-only probes are marked
// as not asserted and never fail a suite.

#include <cstdint>
#include <string>
#include <vector>

#include "scatter1d/kernels.hpp"

namespace scatter1d {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct PropertyResult {
  std::string name;
  bool asserted = true;
  bool passed = true;
  double worst = 0.0;
  double bound = 0.0;
  bool worst_is_minimum = false;  // the property is worst >= bound
  int samples = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

enum class Suite { bessel, transfer, analytic, all };

Suite parse_suite(const std::string& name);  // throws DomainError
std::string to_string(Suite suite);

std::vector<SuiteReport> run_suite(Suite suite, std::uint64_t seed = kDefaultSeed,
                                   Execution exec = Execution::parallel);

SuiteReport validate_bessel(std::uint64_t seed, Execution exec = Execution::parallel);
SuiteReport validate_transfer(std::uint64_t seed, Execution exec = Execution::parallel);
SuiteReport validate_analytic(std::uint64_t seed, Execution exec = Execution::parallel);

// Random configuration of the truncated exponential potential in dimensionless
// form: k0 = 1 (L = m pi), k = gamma, z = a^2.
struct RandomConfig {
  int m;
  double gamma;
  double a_re, a_im;
};
std::vector<RandomConfig> random_ensemble(std::uint64_t seed, int count, int m_max, double a_max,
                                          double gamma_min, double gamma_max);

}  // namespace scatter1d
