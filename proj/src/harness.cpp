#include "bohr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "bohr/core_radius.hpp"
#include "bohr/families.hpp"
#include "bohr/known_values.hpp"
#include "bohr/multidim.hpp"
#include "bohr/oracle.hpp"
#include "bohr/sampling.hpp"

namespace bohr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kSampleMaxDegree = 6;

enum class Mode { Near, AtMost, Below, AtLeast };

struct Check {
  std::string sub;
  double expected;
  double got;
  double tol;
  Mode mode;

  bool ok() const {
    switch (mode) {
      case Mode::Near: return std::abs(got - expected) <= tol;
      case Mode::AtMost: return got <= expected + tol;
      case Mode::Below: return got < expected;
      case Mode::AtLeast: return got >= expected - tol;
    }
    return false;
  }
};

struct Case {
  std::string id;
  std::function<std::vector<Check>()> run;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string pq_id(double p, double q) { return "p=" + num(p) + ",q=" + num(q); }

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return v;
}

// ---------------------------------------------------------------- suites

std::vector<Case> golden_cases() {
  std::vector<Case> cases;
  const auto rows = known_values();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cases.push_back({"golden/" + rows[i].label, [i] {
                       const auto row = known_values()[i];
                       return std::vector<Check>{
                           {"", row.expected, row.computed, kKnownValueTol, Mode::Near}};
                     }});
  }
  return cases;
}

std::vector<Case> oracle_equiv_cases() {
  std::vector<Case> cases;
  for (double p : linspace(1.0, 2.0, 5)) {
    for (double q : linspace(1.0, 2.0, 5)) {
      for (double a : {0.15, 0.4, 0.65, 0.9}) {
        cases.push_back({"oracle_equiv/" + pq_id(p, q) + ",a=" + num(a), [p, q, a] {
                           const BohrParams params(p, q);
                           const double got = radius_of(Mobius{a}, Rpq{params});
                           return std::vector<Check>{
                               {"", eval_A(params, a), got, 1e-7, Mode::Near}};
                         }});
      }
    }
  }
  return cases;
}

std::vector<Case> extremal_cases() {
  std::vector<Case> cases;
  for (double p : linspace(1.0, 4.0, 7)) {
    for (double q : linspace(1.0, 4.0, 7)) {
      cases.push_back({"extremal/" + pq_id(p, q), [p, q] {
                         const BohrParams params(p, q);
                         const double got = radius_of(ZMobius{kInvSqrt2}, Rpq{params});
                         return std::vector<Check>{{"", kInvSqrt2, got, 1e-8, Mode::Near}};
                       }});
    }
  }
  return cases;
}

std::vector<Case> identities_cases() {
  std::vector<Case> cases;
  for (double p : linspace(1.0, 4.5, 8)) {
    for (double q : linspace(1.0, 4.5, 8)) {
      cases.push_back({"identities/" + pq_id(p, q), [p, q] {
                         const BohrParams params(p, q);
                         const auto root = hat_root(params);
                         const double a = root.a_hat;
                         std::vector<Check> checks{
                             {"root_residual", 0.0, std::abs(root.residual), 1e-12, Mode::AtMost},
                             {"A(a_hat)", a, eval_A(params, a), 1e-10, Mode::Near},
                             {"S(a_hat)", a, eval_S(params, a), 1e-10, Mode::Near},
                         };
                         const auto r = radius_scalar(params);
                         if (r.is_exact()) {
                           checks.push_back(
                               {"exact_le_inv_sqrt2", kInvSqrt2, r.value(), 1e-10, Mode::AtMost});
                         } else {
                           checks.push_back({"interval_lo_pos", 0.0, r.lo(), 0.0, Mode::AtLeast});
                           checks.push_back({"interval_lo_le_hi", r.hi(), r.lo(), 0.0, Mode::AtMost});
                         }
                         return checks;
                       }});
    }
  }
  for (double p : linspace(1.0, 2.0, 9)) {
    cases.push_back({"identities/q1_closed_form/p=" + num(p), [p] {
                       const double got = radius_scalar(BohrParams(p, 1.0)).value();
                       return std::vector<Check>{{"", p / (2.0 + p), got, 1e-9, Mode::Near}};
                     }});
  }
  // closed forms of the bound chains
  cases.push_back({"identities/bound_chain", [] {
                     const double third = 1.0 / 3.0;
                     const double h2 = std::sqrt(3.0 / 7.0);
                     return std::vector<Check>{
                         {"pbohr_scalar_lower(1.5,1/3)", std::cbrt(third),
                          pbohr_scalar_lower(1.5, third), 1e-12, Mode::Near},
                         {"hpn_lower_combine(1.5,1/3,h2)", std::cbrt(1.0 / 7.0),
                          hpn_lower_combine(1.5, third, h2), 1e-12, Mode::Near},
                         {"hpn_lower_combine_ge_min", third, hpn_lower_combine(1.5, third, h2),
                          0.0, Mode::AtLeast},
                         {"hpn_lower_combine_le_max", h2, hpn_lower_combine(1.5, third, h2), 0.0,
                          Mode::AtMost},
                         {"pbohr_vector_lower(2,1)", 0.2, pbohr_vector_lower({2.0, 1.0}), 1e-12,
                          Mode::Near},
                     };
                   }});
  return cases;
}

// Sigma_{n>=1} |c_n| r^n over the stored coefficients
double coefficient_sum(const PowerSeries1D& s, double r) {
  double sum = 0.0;
  double w = 1.0;
  const auto& m = s.moduli();
  for (std::size_t n = 1; n < m.size(); ++n) {
    w *= r;
    sum += m[n] * w;
  }
  return sum;
}

std::vector<Case> bombieri_cases(std::uint64_t seed, int samples) {
  std::vector<Case> cases;
  for (int i = 0; i < samples; ++i) {
    cases.push_back({"bombieri/seed=" + std::to_string(seed) + "/i=" + std::to_string(i),
                     [seed, i] {
                       const FunctionFamily f = sample_schur(split_seed(seed, i), kSampleMaxDegree);
                       const int K = terms_for(f, Rpq{BohrParams(1, 1)}, 15.0 / 16.0);
                       const auto series = coefficients(f, K);
                       const double a = std::min(1.0, series.moduli()[0]);
                       std::vector<Check> checks;
                       for (int j = 0; j < 16; ++j) {
                         const double r = j / 16.0;
                         checks.push_back({"r=" + num(r), bombieri_bound(a, r),
                                           coefficient_sum(series, r), 1e-9, Mode::AtMost});
                       }
                       return checks;
                     }});
  }
  return cases;
}

std::vector<Case> schur_random_cases(std::uint64_t seed, int samples) {
  struct Target {
    BohrParams params;
    double radius;
  };
  std::vector<Target> targets;
  for (double p : {1.0, 2.0, 3.0}) {
    for (double q : {1.0, 2.0, 3.0}) {
      const BohrParams params(p, q);
      const auto r = radius_scalar(params);
      if (r.is_exact()) targets.push_back({params, r.value()});
    }
  }
  std::vector<Case> cases;
  for (int i = 0; i < samples; ++i) {
    cases.push_back({"schur_random/seed=" + std::to_string(seed) + "/i=" + std::to_string(i),
                     [seed, i, targets] {
                       const FunctionFamily f = sample_schur(split_seed(seed, i), kSampleMaxDegree);
                       std::vector<Check> checks;
                       for (const auto& t : targets) {
                         const auto qv = evaluate(f, Rpq{t.params}, t.radius);
                         checks.push_back({pq_id(t.params.p(), t.params.q()), 1.0, qv.value, 1e-9,
                                           Mode::AtMost});
                       }
                       const auto series = coefficients(f, 64);
                       const double cmax =
                           *std::max_element(series.moduli().begin(), series.moduli().end());
                       checks.push_back({"max|c_k|", 1.0, cmax, 1e-9, Mode::AtMost});
                       checks.push_back({"parseval", 1.0, evaluate(f, Rp{2.0}, 0.99).value, 1e-9,
                                         Mode::AtMost});
                       return checks;
                     }});
  }
  return cases;
}

std::vector<Case> caratheodory_cases(std::uint64_t seed, int samples) {
  std::vector<Case> cases;
  for (int i = 0; i < samples; ++i) {
    cases.push_back({"caratheodory/seed=" + std::to_string(seed) + "/i=" + std::to_string(i),
                     [seed, i] {
                       const FunctionFamily f =
                           sample_caratheodory(split_seed(seed, i), kSampleMaxDegree);
                       std::vector<Check> checks;
                       const int K = terms_for(f, Hp{2.0}, hpn_exact(4.0));
                       const auto series = coefficients(f, K);
                       const double cmax =
                           *std::max_element(series.moduli().begin(), series.moduli().end());
                       checks.push_back({"max|c_k|", 2.0, cmax, 1e-9, Mode::AtMost});
                       checks.push_back({"c_0", 1.0, series.moduli()[0], 1e-12, Mode::Near});
                       for (double p : {2.0, 3.0, 4.0}) {
                         checks.push_back({"h_quantity,p=" + num(p), 1.0,
                                           evaluate(f, Hp{p}, hpn_exact(p)).value, 1e-9,
                                           Mode::AtMost});
                       }
                       return checks;
                     }});
  }
  for (double p : {2.0, 3.0, 4.0}) {
    cases.push_back({"caratheodory/halfplane/p=" + num(p), [p] {
                       const double r = hpn_exact(p);
                       return std::vector<Check>{
                           {"h_quantity", 1.0, evaluate(HalfPlane{}, Hp{p}, r).value, 1e-9,
                            Mode::Near},
                           {"radius_of", r, radius_of(HalfPlane{}, Hp{p}), 1e-8, Mode::Near},
                       };
                     }});
  }
  return cases;
}

std::vector<Case> hilbert_cases() {
  std::vector<Case> cases;
  const std::vector<std::pair<double, double>> grid{{1.0, 2.0}, {1.5, 3.0}, {2.0, 2.0},
                                                    {2.0, 2.5}, {3.0, 4.0}, {1.0, 5.0}};
  for (auto [p, q] : grid) {
    const std::string base = "hilbert/" + pq_id(p, q);
    cases.push_back({base + "/n1_vs_inf_S", [p, q] {
                       const BohrParams params(p, q);
                       return std::vector<Check>{{"", inf_S(params).value,
                                                  hilbert_radius(params, 1).value, 1e-8,
                                                  Mode::Near}};
                     }});
    cases.push_back({base + "/decreasing", [p, q] {
                       const BohrParams params(p, q);
                       std::vector<Check> checks;
                       const double h1 = hilbert_radius(params, 1).value;
                       double prev = h1;
                       for (int n = 2; n <= 64; ++n) {
                         const double h = hilbert_radius(params, n).value;
                         checks.push_back({"n=" + std::to_string(n), prev, h, 0.0, Mode::Below});
                         checks.push_back({"upper,n=" + std::to_string(n),
                                           std::sqrt(-std::expm1(-std::log(2.0) / n)), h, 1e-10,
                                           Mode::AtMost});
                         checks.push_back({"polydisk_lower,n=" + std::to_string(n), h,
                                           polydisk_lower(h1, n), 1e-12, Mode::AtMost});
                         prev = h;
                       }
                       return checks;
                     }});
    cases.push_back({base + "/extremal", [p, q] {
                       const BohrParams params(p, q);
                       std::vector<Check> checks;
                       for (int n : {1, 2, 3, 8, 64, 1024}) {
                         const auto e = hilbert_extremal(params, n);
                         const std::string tag = "n=" + std::to_string(n);
                         checks.push_back({"boundary," + tag, 1.0, e.boundary_norm(), 1e-10,
                                           Mode::Near});
                         checks.push_back({"bohr," + tag, 1.0, e.bohr_sum(params), 1e-10,
                                           Mode::Near});
                       }
                       for (int n : {1, 2, 4}) {
                         const auto e = hilbert_extremal(params, n);
                         // a boundary minimiser leaves the quantity nearly flat in r
                         if (e.b3 > 0.99) continue;
                         const HilbertChi chi{e.b3, e.r3, e.scale_c, e.n};
                         checks.push_back({"oracle_radius,n=" + std::to_string(n), e.r3,
                                           radius_of(chi, Rpq{params}), 1e-8, Mode::Near});
                       }
                       return checks;
                     }});
    cases.push_back({base + "/stabilization", [p, q] {
                       const BohrParams params(p, q);
                       const double r512 = std::sqrt(512.0) * hilbert_radius(params, 512).value;
                       const double r1024 = std::sqrt(1024.0) * hilbert_radius(params, 1024).value;
                       return std::vector<Check>{{"", 1.0, r1024 / r512, 0.01, Mode::Near}};
                     }});
  }
  return cases;
}

std::vector<Case> monotone_cases(std::uint64_t seed, int samples) {
  std::vector<Case> cases;
  cases.push_back({"monotone/radius_scalar_grid", [] {
                     const auto grid = linspace(1.0, 4.0, 13);
                     const int m = static_cast<int>(grid.size());
                     std::vector<RadiusResult> r;
                     r.reserve(m * m);
                     for (double p : grid) {
                       for (double q : grid) r.push_back(radius_scalar(BohrParams(p, q)));
                     }
                     std::vector<Check> checks;
                     auto at = [&](int i, int j) -> const RadiusResult& { return r[i * m + j]; };
                     for (int i = 0; i < m; ++i) {
                       for (int j = 0; j < m; ++j) {
                         const auto& here = at(i, j);
                         if (!here.is_exact()) continue;
                         if (i + 1 < m && at(i + 1, j).is_exact()) {
                           checks.push_back({"dp," + pq_id(grid[i], grid[j]), here.value(),
                                             at(i + 1, j).value(), 1e-10, Mode::AtLeast});
                         }
                         if (j + 1 < m && at(i, j + 1).is_exact()) {
                           checks.push_back({"dq," + pq_id(grid[i], grid[j]), here.value(),
                                             at(i, j + 1).value(), 1e-10, Mode::AtLeast});
                         }
                       }
                     }
                     return checks;
                   }});
  cases.push_back({"monotone/hpn_exact", [] {
                     std::vector<Check> checks;
                     double prev = hpn_exact(2.0);
                     for (double p : linspace(2.25, 40.0, 152)) {
                       const double h = hpn_exact(p);
                       checks.push_back({"p=" + num(p), h, prev, 0.0, Mode::Below});
                       checks.push_back({"le1,p=" + num(p), 1.0, h, 0.0, Mode::AtMost});
                       prev = h;
                     }
                     return checks;
                   }});
  cases.push_back({"monotone/pbohr_vector_lower", [] {
                     std::vector<Check> checks;
                     for (double p : {2.0, 3.0, 4.0}) {
                       double prev = 0.0;
                       for (double ip : linspace(0.1, 2.0, 20)) {
                         const double v = pbohr_vector_lower({p, ip});
                         checks.push_back({"p=" + num(p) + ",ip=" + num(ip), v, prev, 0.0,
                                           Mode::Below});
                         prev = v;
                       }
                     }
                     return checks;
                   }});
  // quantities nondecreasing in r
  const int n_samples = std::min(samples, 32);
  for (int i = 0; i < n_samples; ++i) {
    cases.push_back({"monotone/quantity_in_r/seed=" + std::to_string(seed) + "/i=" +
                         std::to_string(i),
                     [seed, i] {
                       const FunctionFamily f = sample_schur(split_seed(seed, i), kSampleMaxDegree);
                       const Functional fs[] = {Rpq{BohrParams(1, 1)}, Rpq{BohrParams(2, 3)},
                                                Rp{2.0}};
                       const char* names[] = {"R11", "R23", "Rp2"};
                       std::vector<Check> checks;
                       for (int k = 0; k < 3; ++k) {
                         double prev = -1.0;
                         for (int j = 0; j < 16; ++j) {
                           const double r = 0.95 * j / 15.0;
                           const double v = evaluate(f, fs[k], r).truncated();
                           checks.push_back({std::string(names[k]) + ",r=" + num(r), prev, v,
                                             1e-12, Mode::AtLeast});
                           prev = v;
                         }
                       }
                       return checks;
                     }});
  }
  return cases;
}

std::vector<Case> dispatch_boundary_cases() {
  std::vector<Case> cases;
  const std::vector<std::pair<double, double>> grid{{2.0, 2.0}, {3.0, 2.0}, {4.0, 2.0},
                                                    {2.0, 3.0}, {2.0, 5.0}};
  const CaseTag tags[] = {CaseTag::PQ_le2, CaseTag::Pgt2_Qle2, CaseTag::PQ_ge2,
                          CaseTag::Ple2_Qgt2_exact};
  for (auto [p, q] : grid) {
    cases.push_back({"dispatch_boundary/" + pq_id(p, q), [p, q, tags] {
                       const BohrParams params(p, q);
                       std::vector<Check> checks;
                       checks.push_back({"dispatch", kInvSqrt2, radius_scalar(params).value(),
                                         1e-9, Mode::Near});
                       int applicable = 0;
                       for (CaseTag tag : tags) {
                         double v;
                         try {
                           v = radius_scalar_branch(params, tag).value();
                         } catch (const UnsupportedExponent&) {
                           continue;
                         }
                         ++applicable;
                         checks.push_back({to_string(tag), kInvSqrt2, v, 1e-9, Mode::Near});
                       }
                       checks.push_back({"branches", 2.0, static_cast<double>(applicable), 0.0,
                                         Mode::AtLeast});
                       if (p > 2.0) {
                         checks.push_back({"inf_A", kInvSqrt2, inf_A(params).value, 1e-9,
                                           Mode::AtLeast});
                       }
                       return checks;
                     }});
  }
  return cases;
}

std::vector<Case> cases_for(Suite suite, std::uint64_t seed, int samples) {
  switch (suite) {
    case Suite::Golden: return golden_cases();
    case Suite::OracleEquiv: return oracle_equiv_cases();
    case Suite::Extremal: return extremal_cases();
    case Suite::Identities: return identities_cases();
    case Suite::Bombieri: return bombieri_cases(seed, samples);
    case Suite::SchurRandom: return schur_random_cases(seed, samples);
    case Suite::Hilbert: return hilbert_cases();
    case Suite::Monotone: return monotone_cases(seed, samples);
    case Suite::DispatchBoundary: return dispatch_boundary_cases();
    case Suite::Caratheodory: return caratheodory_cases(seed, samples);
    case Suite::All: {
      std::vector<Case> all;
      for (int s = 0; s < static_cast<int>(Suite::All); ++s) {
        auto part = cases_for(static_cast<Suite>(s), seed, samples);
        std::move(part.begin(), part.end(), std::back_inserter(all));
      }
      return all;
    }
  }
  throw std::logic_error("unhandled suite");
}

struct CaseOutcome {
  int checks = 0;
  std::vector<CaseFailure> failures;
};

CaseOutcome run_case(const Case& c) {
  CaseOutcome out;
  try {
    for (const auto& chk : c.run()) {
      ++out.checks;
      if (!chk.ok()) {
        out.failures.push_back(
            {chk.sub.empty() ? c.id : c.id + "/" + chk.sub, chk.expected, chk.got, chk.tol});
      }
    }
  } catch (const std::exception& e) {
    out.checks = std::max(out.checks, 1);
    out.failures.push_back({c.id + "/error: " + e.what(), kNaN, kNaN, 0.0});
  }
  return out;
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Golden: return "golden";
    case Suite::OracleEquiv: return "oracle_equiv";
    case Suite::Extremal: return "extremal";
    case Suite::Identities: return "identities";
    case Suite::Bombieri: return "bombieri";
    case Suite::SchurRandom: return "schur_random";
    case Suite::Hilbert: return "hilbert";
    case Suite::Monotone: return "monotone";
    case Suite::DispatchBoundary: return "dispatch_boundary";
    case Suite::Caratheodory: return "caratheodory";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> suite_from_string(std::string_view name) {
  for (int s = 0; s <= static_cast<int>(Suite::All); ++s) {
    if (to_string(static_cast<Suite>(s)) == name) return static_cast<Suite>(s);
  }
  return std::nullopt;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (int s = 0; s <= static_cast<int>(Suite::All); ++s) {
    names.push_back(to_string(static_cast<Suite>(s)));
  }
  return names;
}

SuiteReport run_suite(Suite suite, std::uint64_t seed, int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite_name = to_string(suite);

  std::vector<CaseOutcome> outcomes;
  std::vector<Case> cases;
  try {
    cases = cases_for(suite, seed, samples);
  } catch (const std::exception& e) {
    report.cases_run = 1;
    report.failures.push_back({report.suite_name + "/setup error: " + e.what(), kNaN, kNaN, 0.0});
    return report;
  }
  outcomes.resize(cases.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = run_case(cases[i]);
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), cases.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& o : outcomes) {
    report.cases_run += o.checks;
    std::move(o.failures.begin(), o.failures.end(), std::back_inserter(report.failures));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const CaseFailure& a, const CaseFailure& b) { return a.id < b.id; });
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, int samples) {
  const auto suite = suite_from_string(name);
  if (!suite) throw std::invalid_argument("unknown suite: " + std::string(name));
  return run_suite(*suite, seed, samples);
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"id", f.id}, {"expected", f.expected}, {"got", f.got}, {"tol", f.tol}});
  }
  return {{"suite", report.suite_name},
          {"cases", report.cases_run},
          {"failures", failures},
          {"seconds", report.wall_time}};
}

}  // namespace bohr
