#include "scenario.hpp"

#include <filesystem>
#include <fstream>

namespace mgp::cli {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

double get_num(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

long get_int(const ordered_json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::vector<double> get_num_array(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_num(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<long> get_int_array(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

HurstProfile parse_profile(const ordered_json& outer) {
  if (!outer.is_object()) fail("profile", "expected an object");
  if (!outer.contains("kind")) fail("profile.kind", "required");
  const std::string kind = outer.at("kind").get<std::string>();
  // parameters may sit next to "kind" or nested under "params"
  const ordered_json& j = outer.contains("params") ? outer.at("params") : outer;
  try {
    if (kind == "constant") {
      if (!j.contains("h")) fail("profile.h", "required for constant profiles");
      return HurstProfile::constant(get_num(j.at("h"), "profile.h"));
    }
    const double a = j.contains("a") ? get_num(j.at("a"), "profile.a") : 0.6;
    const double b = j.contains("b") ? get_num(j.at("b"), "profile.b") : 0.9;
    if (kind == "sinusoidal") {
      const double center =
          j.contains("center") ? get_num(j.at("center"), "profile.center") : 0.75;
      const double amplitude =
          j.contains("amplitude") ? get_num(j.at("amplitude"), "profile.amplitude") : 0.15;
      const double omega = j.contains("omega") ? get_num(j.at("omega"), "profile.omega") : 1.0;
      const double phase = j.contains("phase") ? get_num(j.at("phase"), "profile.phase") : 0.0;
      return HurstProfile::sinusoidal(center, amplitude, omega, phase, a, b);
    }
    if (kind == "linear-clamped") {
      if (!j.contains("h0")) fail("profile.h0", "required for linear-clamped profiles");
      if (!j.contains("slope")) fail("profile.slope", "required for linear-clamped profiles");
      return HurstProfile::linear_clamped(get_num(j.at("h0"), "profile.h0"),
                                          get_num(j.at("slope"), "profile.slope"), a, b);
    }
    if (kind == "piecewise-linear") {
      if (!j.contains("knots")) fail("profile.knots", "required for piecewise-linear profiles");
      const auto& kj = j.at("knots");
      if (!kj.is_array()) fail("profile.knots", "expected an array of [t, h] pairs");
      std::vector<std::pair<double, double>> knots;
      for (std::size_t i = 0; i < kj.size(); ++i) {
        const std::string p = "profile.knots[" + std::to_string(i) + "]";
        if (!kj[i].is_array() || kj[i].size() != 2) fail(p, "expected a [t, h] pair");
        knots.emplace_back(get_num(kj[i][0], p + "[0]"), get_num(kj[i][1], p + "[1]"));
      }
      return HurstProfile::piecewise_linear(std::move(knots), a, b);
    }
  } catch (const DomainError& e) {
    // constraint violations from the profile constructors, e.g. a = 0.4:
    // report them against the profile path with the (1/2, 1) constraint
    fail("profile", std::string(e.what()) +
                        " (bounds must satisfy 1/2 < a <= b < 1)");
  }
  fail("profile.kind", "unknown kind '" + kind +
                           "' (constant | linear-clamped | sinusoidal | piecewise-linear)");
}

kernels::AsymptoticCovariance parse_asympt(const ordered_json& j,
                                           fields::FieldModel::Kind model_kind) {
  if (j.is_null() || (j.is_object() && (!j.contains("kind") ||
                                        j.at("kind").get<std::string>() == "auto")))
    return model_kind == fields::FieldModel::Kind::Fwn
               ? kernels::AsymptoticCovariance::fwn()
               : kernels::AsymptoticCovariance::farima();
  if (!j.is_object()) fail("asympt", "expected an object");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fwn") return kernels::AsymptoticCovariance::fwn();
  if (kind == "farima") return kernels::AsymptoticCovariance::farima();
  if (kind == "constant") {
    if (!j.contains("value")) fail("asympt.value", "required for constant kind");
    try {
      return kernels::AsymptoticCovariance::constant(get_num(j.at("value"), "asympt.value"));
    } catch (const DomainError& e) {
      fail("asympt.value", e.what());
    }
  }
  if (kind == "user-table") {
    if (!j.contains("h_grid") || !j.contains("values"))
      fail("asympt", "user-table needs h_grid and values");
    const auto grid = get_num_array(j.at("h_grid"), "asympt.h_grid");
    const auto& vj = j.at("values");
    if (!vj.is_array()) fail("asympt.values", "expected an array of rows");
    std::vector<std::vector<double>> values;
    for (std::size_t i = 0; i < vj.size(); ++i)
      values.push_back(get_num_array(vj[i], "asympt.values[" + std::to_string(i) + "]"));
    try {
      return kernels::AsymptoticCovariance::table(grid, values);
    } catch (const DomainError& e) {
      fail("asympt", e.what());
    }
  }
  fail("asympt.kind", "unknown kind '" + kind + "'");
}

void apply_override(ordered_json& root, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw ConfigError("--set: expected dot.path=value, got '" + spec + "'");
  const std::string path = spec.substr(0, eq);
  const std::string raw = spec.substr(eq + 1);
  ordered_json value;
  try {
    value = ordered_json::parse(raw);
  } catch (...) {
    value = raw;  // unquoted strings pass through
  }
  ordered_json* node = &root;
  std::size_t pos = 0;
  while (true) {
    const auto dot = path.find('.', pos);
    const std::string key = path.substr(pos, dot - pos);
    if (key.empty()) throw ConfigError("--set: empty key in path '" + path + "'");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    pos = dot + 1;
  }
}

}  // namespace

ScenarioConfig parse_scenario(ordered_json j, const std::string& name) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ScenarioConfig cfg;
  cfg.name = name;

  if (!j.contains("model")) throw ConfigError("model: required");
  if (!j.at("model").is_object() || !j.at("model").contains("kind"))
    throw ConfigError("model.kind: required");
  const std::string mk = j.at("model").at("kind").get<std::string>();
  if (mk == "fwn")
    cfg.model_kind = fields::FieldModel::Kind::Fwn;
  else if (mk == "farima")
    cfg.model_kind = fields::FieldModel::Kind::Farima;
  else
    throw ConfigError("model.kind: unknown kind '" + mk + "' (fwn | farima)");

  if (!j.contains("profile")) throw ConfigError("profile: required");
  cfg.profile = parse_profile(j.at("profile"));
  cfg.asympt = parse_asympt(j.contains("asympt") ? j.at("asympt") : ordered_json(),
                            cfg.model_kind);

  if (j.contains("n_ladder")) {
    cfg.n_ladder = get_int_array(j.at("n_ladder"), "n_ladder");
    for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
      if (cfg.n_ladder[i] < 1) fail("n_ladder", "scales must be >= 1");
      if (i > 0 && cfg.n_ladder[i] <= cfg.n_ladder[i - 1])
        fail("n_ladder", "must be strictly increasing");
    }
  }
  if (j.contains("time_grid")) {
    cfg.time_grid = get_num_array(j.at("time_grid"), "time_grid");
    for (std::size_t i = 0; i < cfg.time_grid.size(); ++i) {
      if (!(cfg.time_grid[i] >= 0.0)) fail("time_grid", "times must be nonnegative");
      if (i > 0 && !(cfg.time_grid[i] > cfg.time_grid[i - 1]))
        fail("time_grid", "must be strictly increasing");
    }
  }
  if (j.contains("eps_ladder")) {
    cfg.eps_ladder = get_num_array(j.at("eps_ladder"), "eps_ladder");
    for (std::size_t i = 0; i < cfg.eps_ladder.size(); ++i) {
      if (!(cfg.eps_ladder[i] > 0.0)) fail("eps_ladder", "entries must be positive");
      if (i > 0 && !(cfg.eps_ladder[i] < cfg.eps_ladder[i - 1]))
        fail("eps_ladder", "must be strictly decreasing");
    }
  }
  if (j.contains("seed")) cfg.seed = static_cast<std::uint64_t>(get_int(j.at("seed"), "seed"));
  if (j.contains("replicates")) {
    const long r = get_int(j.at("replicates"), "replicates");
    if (r < 1) fail("replicates", "must be >= 1");
    cfg.replicates = static_cast<std::size_t>(r);
  }
  if (j.contains("threads")) {
    const long t = get_int(j.at("threads"), "threads");
    if (t < 0) fail("threads", "must be >= 0 (0 = hardware)");
    cfg.threads = static_cast<int>(t);
  }
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    if (q.contains("rel_tol")) {
      cfg.quadrature.rel_tol = get_num(q.at("rel_tol"), "quadrature.rel_tol");
      if (!(cfg.quadrature.rel_tol > 0.0)) fail("quadrature.rel_tol", "must be positive");
    }
    if (q.contains("max_panels")) {
      cfg.quadrature.max_panels =
          static_cast<int>(get_int(q.at("max_panels"), "quadrature.max_panels"));
      if (cfg.quadrature.max_panels < 16) fail("quadrature.max_panels", "must be >= 16");
    }
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    auto opt = [&](const char* key, double& slot) {
      if (t.contains(key)) {
        slot = get_num(t.at(key), std::string("tolerances.") + key);
        if (!(slot > 0.0)) fail(std::string("tolerances.") + key, "must be positive");
      }
    };
    opt("invariance_final_rel", cfg.tolerances.invariance_final_rel);
    opt("oracle_rel", cfg.tolerances.oracle_rel);
    opt("tangent_distinct", cfg.tolerances.tangent_distinct);
    opt("representation_rel", cfg.tolerances.representation_rel);
    opt("holder_abs", cfg.tolerances.holder_abs);
  }
  if (j.contains("tangent")) {
    const auto& t = j.at("tangent");
    if (t.contains("t_same")) cfg.tangent.t_same = get_num(t.at("t_same"), "tangent.t_same");
    if (t.contains("t_distinct"))
      cfg.tangent.t_distinct = get_num(t.at("t_distinct"), "tangent.t_distinct");
    if (t.contains("s_distinct"))
      cfg.tangent.s_distinct = get_num(t.at("s_distinct"), "tangent.s_distinct");
    if (t.contains("u")) cfg.tangent.u = get_num(t.at("u"), "tangent.u");
    if (t.contains("v")) cfg.tangent.v = get_num(t.at("v"), "tangent.v");
    if (!(cfg.tangent.t_distinct < cfg.tangent.s_distinct))
      fail("tangent.s_distinct", "distinct base points must satisfy t < s");
  }
  if (j.contains("holder")) {
    const auto& h = j.at("holder");
    if (h.contains("t0")) cfg.holder.t0 = get_num_array(h.at("t0"), "holder.t0");
    if (h.contains("window")) {
      cfg.holder.window = get_num(h.at("window"), "holder.window");
      if (!(cfg.holder.window > 0.0 && cfg.holder.window <= 0.1))
        fail("holder.window", "must lie in (0, 0.1]");
    }
    if (h.contains("cells")) {
      cfg.holder.cells = static_cast<int>(get_int(h.at("cells"), "holder.cells"));
      if (cfg.holder.cells < 16) fail("holder.cells", "must be >= 16");
    }
  }
  if (j.contains("representation")) {
    const auto& rj = j.at("representation");
    if (rj.contains("t")) cfg.representation.t = get_num(rj.at("t"), "representation.t");
    if (rj.contains("s")) cfg.representation.s = get_num(rj.at("s"), "representation.s");
    if (rj.contains("dh")) cfg.representation.dh = get_num(rj.at("dh"), "representation.dh");
    if (rj.contains("grid_step"))
      cfg.representation.grid_step = get_num(rj.at("grid_step"), "representation.grid_step");
  }
  if (j.contains("renorm")) {
    const auto& rj = j.at("renorm");
    if (rj.contains("fixed_point_n"))
      cfg.renorm.fixed_point_n = get_int_array(rj.at("fixed_point_n"), "renorm.fixed_point_n");
    if (rj.contains("convergence_n"))
      cfg.renorm.convergence_n = get_int_array(rj.at("convergence_n"), "renorm.convergence_n");
    if (rj.contains("h_grid")) cfg.renorm.h_grid = get_num_array(rj.at("h_grid"), "renorm.h_grid");
  }
  if (j.contains("riemann")) {
    const auto& rj = j.at("riemann");
    if (rj.contains("n")) {
      cfg.riemann.n = get_int(rj.at("n"), "riemann.n");
      if (cfg.riemann.n < 1) fail("riemann.n", "must be >= 1");
    }
    if (rj.contains("m")) {
      cfg.riemann.band = get_int(rj.at("m"), "riemann.m");
      if (cfg.riemann.band < 1) fail("riemann.m", "must be >= 1");
    }
    if (rj.contains("times")) cfg.riemann.times = get_num_array(rj.at("times"), "riemann.times");
  }
  if (j.contains("kernels")) {
    const auto& kj = j.at("kernels");
    if (kj.contains("pairs")) {
      const auto& pj = kj.at("pairs");
      if (!pj.is_array() || pj.empty()) fail("kernels.pairs", "expected an array of pairs");
      cfg.kernel_pairs.clear();
      for (std::size_t i = 0; i < pj.size(); ++i) {
        const std::string p = "kernels.pairs[" + std::to_string(i) + "]";
        if (!pj[i].is_array() || pj[i].size() != 2) fail(p, "expected [H1, H2]");
        const double h1 = get_num(pj[i][0], p + "[0]");
        const double h2 = get_num(pj[i][1], p + "[1]");
        if (!(h1 > 0.5 && h1 < 1.0 && h2 > 0.5 && h2 < 1.0))
          fail(p, "Hurst indices must lie in (1/2, 1)");
        cfg.kernel_pairs.emplace_back(h1, h2);
      }
    }
  }
  if (j.contains("sample")) {
    const auto& sj = j.at("sample");
    if (sj.contains("times")) cfg.sample.times = get_num_array(sj.at("times"), "sample.times");
    if (sj.contains("replicates")) {
      const long r = get_int(sj.at("replicates"), "sample.replicates");
      if (r < 1) fail("sample.replicates", "must be >= 1");
      cfg.sample.replicates = static_cast<std::size_t>(r);
    }
  }
  if (cfg.sample.times.empty()) cfg.sample.times = cfg.time_grid;
  if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();

  cfg.resolved = std::move(j);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path,
                             const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  for (const auto& o : overrides) apply_override(j, o);
  return parse_scenario(std::move(j), std::filesystem::path(path).stem().string());
}

}  // namespace mgp::cli
