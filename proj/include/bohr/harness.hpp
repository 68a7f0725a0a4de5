#pragma once

// Property suites tying the closed-form radii to the series oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bohr {

struct CaseFailure {
  std::string id;
  double expected;
  double got;
  double tol;
};

struct SuiteReport {
  std::string suite_name;
  int cases_run = 0;
  // sorted by id
  std::vector<CaseFailure> failures;
  double wall_time = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

enum class Suite {
  Golden,
  OracleEquiv,
  Extremal,
  Identities,
  Bombieri,
  SchurRandom,
  Hilbert,
  Monotone,
  DispatchBoundary,
  Caratheodory,
  All,
};

std::string to_string(Suite suite);
std::optional<Suite> suite_from_string(std::string_view name);
std::vector<std::string> suite_names();

/// Runs one suite. Module errors inside a case are recorded as failures of
/// that case. Randomized suites (bombieri, schur_random, caratheodory) draw
/// sample i from split_seed(seed, i); samples must be >= 1.
SuiteReport run_suite(Suite suite, std::uint64_t seed, int samples);
SuiteReport run_suite(std::string_view name, std::uint64_t seed, int samples);

/// {"suite","cases","failures":[{"id","expected","got","tol"}],"seconds"}
nlohmann::json to_json(const SuiteReport& report);

}  // namespace bohr
