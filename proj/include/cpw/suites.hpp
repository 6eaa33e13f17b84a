#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cpw/ideals.hpp"

namespace cpw {

/// Parses a system configuration: {"model":"finite","permutation":[...]},
/// {"model":"shift"} or {"model":"circle","q":"3/5+4/5i"}. ConfigError with
/// the field path on invalid input.
SystemModel parse_config(const nlohmann::json& config);
nlohmann::json config_echo(const SystemModel& s);

struct CheckOptions {
  int degree = 4;
  int radius = 3;
  int samples = 100;
  std::uint64_t seed = 1;
};

enum class ItemStatus { Pass, Fail, Unsupported };

struct CheckItem {
  std::string name;
  ItemStatus status = ItemStatus::Pass;
  nlohmann::json detail;   // certificate, counterexample, or summary values
  double elapsed_ms = 0;   // human output only; omitted from JSON reports
};

struct CheckSuiteResult {
  std::string suite;
  nlohmann::json system;
  std::vector<CheckItem> items;

  ItemStatus status() const;
  int exit_code() const;  // 0 pass, 2 fail, 3 unsupported-only
  nlohmann::json to_json() const;
  std::string human_text() const;
};

extern const std::vector<std::string> kSuiteNames;  // triquiv commint simplicity primeness baire algebra

CheckSuiteResult run_check_suite(const std::string& suite, const SystemModel& s,
                                 const nlohmann::json& system_echo, const CheckOptions& options);

/// Property table plus the Per^n window, with a consistency row tying
/// maximal abelianness to aperiodic density.
nlohmann::json analyze(const SystemModel& s, int per_bound);

/// Witness report for mode "in-a" or "in-commutant" on a parsed element.
nlohmann::json witness_report(const SystemModel& s, const std::string& mode,
                              const std::string& expr);

/// Seeded random element: 1-4 terms, degrees in [-3,3], labels within
/// radius 3 (indices of the finite model), scalars from
/// {1,-1,i,-i,1/2,-1/2,2}.
CrossedElement sample_element(const SystemModel& s, std::mt19937_64& rng, bool nonzero);
CoeffFn sample_coefficient(const SystemModel& s, std::mt19937_64& rng);
GaussianRational sample_scalar(std::mt19937_64& rng);

}  // namespace cpw
