#include "mgp/report.hpp"

#include <cstdio>

namespace mgp::analysis {

bool Report::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "mgp-report/1";
  j["scenario"] = scenario;
  j["parameters"] = parameters;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["tolerance"] = c.tolerance;
    cj["verdict"] = c.pass ? "PASS" : "FAIL";
    if (!c.note.empty()) cj["note"] = c.note;
    arr.push_back(cj);
  }
  j["criteria"] = arr;
  nlohmann::ordered_json tables;
  for (const auto& [name, rows] : error_tables) {
    auto tj = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json rj;
      rj["key"] = r.key;
      rj["max_abs_err"] = r.max_abs_err;
      rj["max_rel_err"] = r.max_rel_err;
      tj.push_back(rj);
    }
    tables[name] = tj;
  }
  j["error_tables"] = tables;
  j["rng"] = rng;
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  r.parameters = j.at("parameters");
  for (const auto& cj : j.at("criteria")) {
    Criterion c;
    c.name = cj.at("name").get<std::string>();
    c.value = cj.at("value").get<double>();
    c.tolerance = cj.at("tolerance").get<double>();
    c.pass = cj.at("verdict").get<std::string>() == "PASS";
    if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
    r.criteria.push_back(c);
  }
  for (const auto& [name, tj] : j.at("error_tables").items()) {
    ErrorTable rows;
    for (const auto& rj : tj)
      rows.push_back({rj.at("key").get<double>(), rj.at("max_abs_err").get<double>(),
                      rj.at("max_rel_err").get<double>()});
    r.error_tables.emplace_back(name, std::move(rows));
  }
  r.rng = j.at("rng");
  return r;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string error_table_csv(const ErrorTable& rows) {
  std::string out = "N_or_eps,max_abs_err,max_rel_err\r\n";
  for (const auto& r : rows) {
    out += format_g17(r.key);
    out += ',';
    out += format_g17(r.max_abs_err);
    out += ',';
    out += format_g17(r.max_rel_err);
    out += "\r\n";
  }
  return out;
}

}  // namespace mgp::analysis
