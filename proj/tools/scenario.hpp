#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mgp/fields.hpp"
#include "mgp/hurst_profile.hpp"
#include "mgp/kernels.hpp"
#include "mgp/quadrature.hpp"

namespace mgp::cli {

// Fully resolved scenario: every field defaulted except model and profile.
struct ScenarioConfig {
  std::string name = "scenario";
  fields::FieldModel::Kind model_kind = fields::FieldModel::Kind::Fwn;
  HurstProfile profile = HurstProfile::constant(0.75);
  kernels::AsymptoticCovariance asympt = kernels::AsymptoticCovariance::fwn();

  std::vector<long> n_ladder = {64, 256, 1024, 4096};
  std::vector<double> time_grid = {0.5, 1.0, 1.5, 2.0};
  std::vector<double> eps_ladder = {0.25,    0.125,     0.0625,   0.03125,
                                    0.015625, 0.0078125, 0.00390625};
  std::uint64_t seed = 20250801;
  std::size_t replicates = 1000;
  int threads = 0;

  quad::Options quadrature;

  struct Tolerances {
    double invariance_final_rel = 0.05;
    double oracle_rel = 1e-3;
    double tangent_distinct = 1e-2;
    double representation_rel = 1e-2;
    double holder_abs = 0.07;
  } tolerances;

  struct Tangent {
    double t_same = 1.0;
    double t_distinct = 4.0;
    double s_distinct = 5.0;
    double u = 1.0;
    double v = 1.0;
  } tangent;

  struct Holder {
    std::vector<double> t0 = {0.5, 1.0};
    double window = 0.1;
    int cells = 32;
  } holder;

  struct Representation {
    double t = 1.0;
    double s = 1.0;
    double dh = 1e-3;
    double grid_step = 0.001953125;  // 1/512
  } representation;

  struct Renorm {
    std::vector<long> fixed_point_n = {2, 4, 8};
    std::vector<long> convergence_n = {4, 16, 64};
    std::vector<double> h_grid = {0.65, 0.75, 0.85};
  } renorm;

  struct Riemann {
    long n = 8192;
    long band = 4;
    std::vector<double> times = {0.25, 0.5, 0.75, 1.0};
  } riemann;

  std::vector<std::pair<double, double>> kernel_pairs = {
      {0.7, 0.7}, {0.6, 0.8}, {0.8, 0.6}};

  struct Sample {
    std::vector<double> times;  // defaults to time_grid when empty
    std::size_t replicates = 100;
  } sample;

  std::string output_dir = "out";

  // the resolved configuration as written into reports
  nlohmann::ordered_json resolved;

  fields::FieldModel model() const {
    return model_kind == fields::FieldModel::Kind::Fwn
               ? fields::FieldModel::fwn(profile.lower(), profile.upper())
               : fields::FieldModel::farima(profile.lower(), profile.upper());
  }
};

// Reads and validates a config file, applying --set dot-path overrides first.
// Throws ConfigError with the offending JSON path in the message.
ScenarioConfig load_scenario(const std::string& path,
                             const std::vector<std::string>& overrides);

// Parses the already-loaded JSON (exposed for tests).
ScenarioConfig parse_scenario(nlohmann::ordered_json j, const std::string& name);

}  // namespace mgp::cli
