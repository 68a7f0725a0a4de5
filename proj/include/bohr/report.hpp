#pragma once

// Serialisation of radius results: JSON records, CSV sweep rows and the
// 12-significant-digit text format used on the console.

#include <optional>
#include <string>

#include <json.hpp>

#include "bohr/core_radius.hpp"

namespace bohr {

/// One computed radius plus the request that produced it.
struct OutputRecord {
  double p = 0.0;
  std::optional<double> q;
  std::optional<int> n;
  RadiusResult::Kind kind = RadiusResult::Kind::Exact;
  std::optional<double> value;
  std::optional<double> lo;
  std::optional<double> hi;
  std::string case_tag;
  Argmin argmin;
};

OutputRecord make_record(const BohrParams& params, const RadiusResult& result);

nlohmann::json to_json(const OutputRecord& rec);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
OutputRecord record_from_json(const nlohmann::json& j);

bool operator==(const OutputRecord& a, const OutputRecord& b);

/// %.12g
std::string format_number(double x);

inline constexpr const char* kSweepCsvHeader = "p,q,kind,value,lo,hi,case,argmin_a";
std::string csv_row(const OutputRecord& rec);

}  // namespace bohr
