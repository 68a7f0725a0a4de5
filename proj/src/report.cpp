#include "bohr/report.hpp"

#include <cstdio>

namespace bohr {

OutputRecord make_record(const BohrParams& params, const RadiusResult& result) {
  OutputRecord rec;
  rec.p = params.p();
  rec.q = params.q();
  rec.kind = result.kind();
  if (result.is_exact()) {
    rec.value = result.value();
  } else {
    rec.lo = result.lo();
    rec.hi = result.hi();
  }
  rec.case_tag = to_string(result.case_tag());
  rec.argmin = result.argmin();
  return rec;
}

nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["p"] = rec.p;
  if (rec.q) j["q"] = *rec.q;
  if (rec.n) j["n"] = *rec.n;
  j["kind"] = rec.kind == RadiusResult::Kind::Exact ? "exact" : "interval";
  if (rec.value) j["value"] = *rec.value;
  if (rec.lo) j["lo"] = *rec.lo;
  if (rec.hi) j["hi"] = *rec.hi;
  j["case"] = rec.case_tag;
  switch (rec.argmin.kind) {
    case Argmin::Kind::Point: j["argmin_a"] = rec.argmin.a; break;
    case Argmin::Kind::Boundary: j["argmin_a"] = "boundary"; break;
    case Argmin::Kind::None: break;
  }
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  rec.p = j.at("p").get<double>();
  if (j.contains("q")) rec.q = j.at("q").get<double>();
  if (j.contains("n")) rec.n = j.at("n").get<int>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "exact") {
    rec.kind = RadiusResult::Kind::Exact;
  } else if (kind == "interval") {
    rec.kind = RadiusResult::Kind::Interval;
  } else {
    throw nlohmann::json::other_error::create(501, "unknown kind: " + kind, &j);
  }
  if (j.contains("value")) rec.value = j.at("value").get<double>();
  if (j.contains("lo")) rec.lo = j.at("lo").get<double>();
  if (j.contains("hi")) rec.hi = j.at("hi").get<double>();
  rec.case_tag = j.at("case").get<std::string>();
  if (j.contains("argmin_a")) {
    const auto& a = j.at("argmin_a");
    rec.argmin = a.is_string() ? Argmin::boundary() : Argmin::point(a.get<double>());
  }
  return rec;
}

bool operator==(const OutputRecord& a, const OutputRecord& b) {
  return a.p == b.p && a.q == b.q && a.n == b.n && a.kind == b.kind && a.value == b.value &&
         a.lo == b.lo && a.hi == b.hi && a.case_tag == b.case_tag &&
         a.argmin.kind == b.argmin.kind &&
         (a.argmin.kind != Argmin::Kind::Point || a.argmin.a == b.argmin.a);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_row(const OutputRecord& rec) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  std::string argmin;
  if (rec.argmin.kind == Argmin::Kind::Point) argmin = format_number(rec.argmin.a);
  if (rec.argmin.kind == Argmin::Kind::Boundary) argmin = "boundary";
  return format_number(rec.p) + "," + opt(rec.q) + "," +
         (rec.kind == RadiusResult::Kind::Exact ? "exact" : "interval") + "," + opt(rec.value) +
         "," + opt(rec.lo) + "," + opt(rec.hi) + "," + rec.case_tag + "," + argmin;
}

}  // namespace bohr
