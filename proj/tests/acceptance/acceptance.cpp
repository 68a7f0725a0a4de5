// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "bohr/core_radius.hpp"
#include "bohr/harness.hpp"
#include "bohr/known_values.hpp"
#include "bohr/multidim.hpp"

using namespace bohr;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const SuiteReport& r) {
  std::string s = r.suite_name + ": " + std::to_string(r.cases_run) + " checks, " +
                  std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) s += ", first " + r.failures.front().id;
  return s;
}

Outcome suite_outcome(Suite suite, std::uint64_t seed, int samples, double time_limit = 0.0) {
  const auto r = run_suite(suite, seed, samples);
  std::string detail = summary(r);
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.3f s", r.wall_time);
  detail += buf;
  bool ok = r.passed();
  if (time_limit > 0.0 && r.wall_time >= time_limit) {
    ok = false;
    detail += " (limit exceeded)";
  }
  return {ok, detail};
}

Outcome golden() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (const auto& row : known_values()) {
    if (!(std::abs(row.expected - row.computed) <= kKnownValueTol)) ++bad;
  }
  const auto suite = run_suite(Suite::Golden, 1, 1);
  const double t = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu table rows, %d off by more than 1e-9, %.3f s",
                known_values().size(), bad, t);
  return {bad == 0 && suite.passed() && t < 1.0, buf};
}

Outcome bound_chains() {
  const double third = 1.0 / 3.0;
  const double h2 = std::sqrt(3.0 / 7.0);
  double worst = 0.0;
  worst = std::max(worst, std::abs(pbohr_scalar_lower(1.5, third) - std::cbrt(third)));
  worst = std::max(worst, std::abs(pbohr_scalar_lower(1.25, 0.2) - std::pow(0.2, 0.6)));
  worst = std::max(worst, std::abs(hpn_lower_combine(1.5, third, h2) - std::cbrt(1.0 / 7.0)));
  worst = std::max(worst, std::abs(hpn_lower_combine(1.25, third, h2) -
                                   std::pow(third, 0.6) * std::pow(3.0 / 7.0, 0.2)));
  bool stable = true;
  for (auto [p, q] : {std::pair{2.0, 2.0}, {1.0, 3.0}, {1.5, 2.5}}) {
    const BohrParams prm(p, q);
    const double a = std::sqrt(512.0) * hilbert_radius(prm, 512).value;
    const double b = std::sqrt(1024.0) * hilbert_radius(prm, 1024).value;
    stable = stable && std::abs(b / a - 1.0) < 0.01;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "closed-form bound chains max error %.2e; rescaled Hilbert radius %s",
                worst, stable ? "stable" : "unstable");
  return {worst <= 1e-12 && stable, buf};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "golden values", golden},
      {2, "oracle-formula equivalence",
       [] { return suite_outcome(Suite::OracleEquiv, 1, 1, 30.0); }},
      {3, "extremal attainment", [] { return suite_outcome(Suite::Extremal, 1, 1); }},
      {4, "collapse identity", [] { return suite_outcome(Suite::Identities, 1, 1); }},
      {5, "random Schur soundness", [] { return suite_outcome(Suite::SchurRandom, 1, 500); }},
      {6, "Bombieri bounds", [] { return suite_outcome(Suite::Bombieri, 1, 500); }},
      {7, "Hilbert suite", [] { return suite_outcome(Suite::Hilbert, 1, 1); }},
      {8, "dispatch boundary", [] { return suite_outcome(Suite::DispatchBoundary, 1, 1); }},
      {9, "Caratheodory suite", [] { return suite_outcome(Suite::Caratheodory, 1, 200); }},
      {10, "declared substitutes: stabilization and bound chains", bound_chains},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
