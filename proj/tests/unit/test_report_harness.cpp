#include <doctest.h>

#include <string>

#include "bohr/core_radius.hpp"
#include "bohr/harness.hpp"
#include "bohr/known_values.hpp"
#include "bohr/report.hpp"

using namespace bohr;

TEST_CASE("records round trip through JSON") {
  for (auto [p, q] : {std::pair{1.0, 1.0}, {1.0, 3.0}, {1.0, 2.0}, {2.0, 5.0}, {1.7, 2.9}}) {
    const BohrParams prm(p, q);
    const auto rec = make_record(prm, radius_scalar(prm));
    const auto text = to_json(rec).dump();
    CAPTURE(text);
    CHECK(record_from_json(nlohmann::json::parse(text)) == rec);
  }
  OutputRecord h;
  h.p = 2;
  h.q = 2;
  h.n = 7;
  h.value = 0.25;
  h.case_tag = "hilbert";
  CHECK(record_from_json(nlohmann::json::parse(to_json(h).dump())) == h);
}

TEST_CASE("JSON record fields") {
  const auto j = to_json(make_record(BohrParams(1, 1), radius_scalar(BohrParams(1, 1))));
  CHECK(j["kind"] == "exact");
  CHECK(j["case"] == "PQ_le2");
  CHECK(j["argmin_a"] == "boundary");
  CHECK_FALSE(j.contains("lo"));
  const auto k = to_json(make_record(BohrParams(1, 3), radius_scalar(BohrParams(1, 3))));
  CHECK(k["kind"] == "interval");
  CHECK_FALSE(k.contains("value"));
  CHECK(k["hi"].get<double>() == kInvSqrt2);
  CHECK_THROWS(record_from_json(nlohmann::json::parse(R"({"p":1,"kind":"maybe","case":"x"})")));
}

TEST_CASE("CSV rows and number format") {
  CHECK(std::string(kSweepCsvHeader) == "p,q,kind,value,lo,hi,case,argmin_a");
  CHECK(csv_row(make_record(BohrParams(1, 1), radius_scalar(BohrParams(1, 1)))) ==
        "1,1,exact,0.333333333333,,,PQ_le2,boundary");
  const auto row = csv_row(make_record(BohrParams(1, 3), radius_scalar(BohrParams(1, 3))));
  CHECK(row.rfind("1,3,interval,,", 0) == 0);
  CHECK(row.find(",0.707106781187,Ple2_Qgt2_interval,") != std::string::npos);
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("known value table") {
  const auto rows = known_values();
  CHECK(rows.size() == 11);
  for (const auto& r : rows) {
    CAPTURE(r.label);
    CHECK(std::abs(r.expected - r.computed) <= kKnownValueTol);
    CHECK_FALSE(r.source.empty());
  }
}

TEST_CASE("suite names") {
  for (const auto& name : suite_names()) CHECK(to_string(*suite_from_string(name)) == name);
  CHECK_FALSE(suite_from_string("bogus").has_value());
  CHECK_THROWS_AS(run_suite("bogus", 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(Suite::SchurRandom, 1, 0), std::invalid_argument);
}

TEST_CASE("suites are reproducible") {
  const auto a = run_suite(Suite::SchurRandom, 17, 40);
  const auto b = run_suite(Suite::SchurRandom, 17, 40);
  CHECK(a.cases_run == b.cases_run);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.passed());
  CHECK(a.cases_run == 40 * 10);
}

TEST_CASE("all is the union of its members") {
  int total = 0;
  for (int s = 0; s < static_cast<int>(Suite::All); ++s) {
    const auto r = run_suite(static_cast<Suite>(s), 3, 12);
    CAPTURE(r.suite_name);
    CHECK(r.passed());
    total += r.cases_run;
  }
  const auto all = run_suite(Suite::All, 3, 12);
  CHECK(all.cases_run == total);
  CHECK(all.passed());
}

TEST_CASE("report JSON schema") {
  const auto j = to_json(run_suite(Suite::Golden, 1, 1));
  CHECK(j["suite"] == "golden");
  CHECK(j["cases"].get<int>() == 11);
  CHECK(j["failures"].is_array());
  CHECK(j["seconds"].is_number());
  CHECK(j.size() == 4);
}
