#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mgp::analysis {

// One named check with its measured value and the tolerance it was held to.
struct Criterion {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// One row of an error table keyed by N (ladder scale) or epsilon.
struct ErrorRow {
  double key = 0.0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
};

using ErrorTable = std::vector<ErrorRow>;

// Structured verification output. Serialization is loss-free: numbers are
// emitted with shortest round-trip representation by the JSON writer and
// with 17 significant digits in CSV.
struct Report {
  std::string scenario;
  nlohmann::ordered_json parameters;
  std::vector<Criterion> criteria;
  std::vector<std::pair<std::string, ErrorTable>> error_tables;
  nlohmann::ordered_json rng;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
};

// RFC-4180 CSV with header N_or_eps,max_abs_err,max_rel_err, '.' decimal
// separator, 17 significant digits.
std::string error_table_csv(const ErrorTable& rows);

std::string format_g17(double v);

}  // namespace mgp::analysis
