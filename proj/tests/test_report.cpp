#include <doctest.h>

#include "mgp/report.hpp"

using namespace mgp::analysis;

TEST_CASE("report JSON serialization round-trips losslessly") {
  Report rep;
  rep.scenario = "demo/check";
  rep.parameters = nlohmann::ordered_json{{"seed", 42}, {"rel_tol", 1e-8}};
  rep.criteria.push_back({"demo.alpha", 0.1234567890123456789, 1e-3, true, "note"});
  rep.criteria.push_back({"demo.beta", 7.25, 0.5, false, ""});
  rep.error_tables.emplace_back(
      "tbl", ErrorTable{{64.0, 1e-17, 0.3333333333333333}, {256.0, 2.5e-4, 1e-2}});
  rep.rng = nlohmann::ordered_json{{"generator", "philox4x32-10"}};

  const auto j = rep.to_json();
  const Report back = Report::from_json(j);
  CHECK(back.scenario == rep.scenario);
  CHECK(back.criteria.size() == 2);
  CHECK(back.criteria[0].value == rep.criteria[0].value);
  CHECK(back.criteria[0].pass);
  CHECK_FALSE(back.criteria[1].pass);
  CHECK(back.error_tables.size() == 1);
  CHECK(back.error_tables[0].second[0].max_rel_err ==
        rep.error_tables[0].second[0].max_rel_err);
  CHECK(back.to_json().dump() == j.dump());
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("error table CSV format") {
  const std::string csv = error_table_csv({{64.0, 0.5, 0.25}});
  CHECK(csv == "N_or_eps,max_abs_err,max_rel_err\r\n64,0.5,0.25\r\n");
  const std::string csv17 = error_table_csv({{0.1, 1.0 / 3.0, 2.0 / 3.0}});
  CHECK(csv17.find("0.33333333333333331") != std::string::npos);
}
