#include "regame/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace regame {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config error at " + (path.empty() ? "$" : path) + ": " + what);
}

void expect_keys(const json& obj, const std::string& path,
                 const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) fail(path + "." + item.key(), "unknown key");
  }
}

double get_number(const json& obj, const std::string& path, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

bool get_bool(const json& obj, const std::string& path, const std::string& key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

CostMatrix parse_cost(const json& obj, const std::string& path, const CostMatrix& fallback) {
  expect_keys(obj, path, {"c_aa", "c_bb", "c_ab"});
  CostMatrix c = fallback;
  c.c_aa = get_number(obj, path, "c_aa", c.c_aa);
  c.c_bb = get_number(obj, path, "c_bb", c.c_bb);
  c.c_ab = get_number(obj, path, "c_ab", c.c_ab);
  return c;
}

void parse_axis(const json& obj, const std::string& path, double& min, double& max,
                double& step) {
  expect_keys(obj, path, {"min", "max", "step"});
  min = get_number(obj, path, "min", min);
  max = get_number(obj, path, "max", max);
  step = get_number(obj, path, "step", step);
  if (step <= 0.0) fail(path + ".step", "must be > 0");  // max < min is a legal empty axis
}

std::vector<double> parse_delta_list(const json& v, const std::string& path) {
  std::vector<double> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
  } else if (v.is_object()) {
    double min = 0.0, max = 0.0, step = 1.0;
    parse_axis(v, path, min, max, step);
    out = enumerate_axis(min, max, step);
  } else {
    fail(path, "expected an array of numbers or a {min,max,step} object");
  }
  if (out.empty()) fail(path, "empty delta list");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0 && out[i] <= out[i - 1]) fail(path, "deltas must be strictly increasing");
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
  }
  RunConfig cfg;
  expect_keys(doc, "$",
              {"game", "grid", "oracle", "bargain", "deltas", "threads", "seed"});

  if (doc.contains("game")) {
    const json& g = doc.at("game");
    expect_keys(g, "$.game", {"c0", "c1", "r_a", "r_b", "delta"});
    if (g.contains("c0")) cfg.game.c0 = parse_cost(g.at("c0"), "$.game.c0", cfg.game.c0);
    if (g.contains("c1")) cfg.game.c1 = parse_cost(g.at("c1"), "$.game.c1", cfg.game.c1);
    cfg.game.r_a = get_number(g, "$.game", "r_a", cfg.game.r_a);
    cfg.game.r_b = get_number(g, "$.game", "r_b", cfg.game.r_b);
    cfg.game.delta = get_number(g, "$.game", "delta", cfg.game.delta);
    const ValidationReport report = validate(cfg.game);
    if (!report.ok()) fail("$.game", report.violations.front());
  }

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    expect_keys(g, "$.grid", {"theta_g", "theta_d", "constrain_td_ge_tg"});
    if (g.contains("theta_g")) {
      parse_axis(g.at("theta_g"), "$.grid.theta_g", cfg.grid.theta_g_min,
                 cfg.grid.theta_g_max, cfg.grid.theta_g_step);
    }
    if (g.contains("theta_d")) {
      parse_axis(g.at("theta_d"), "$.grid.theta_d", cfg.grid.theta_d_min,
                 cfg.grid.theta_d_max, cfg.grid.theta_d_step);
    }
    cfg.grid.constrain_td_ge_tg =
        get_bool(g, "$.grid", "constrain_td_ge_tg", cfg.grid.constrain_td_ge_tg);
  }

  if (doc.contains("oracle")) {
    const json& o = doc.at("oracle");
    expect_keys(o, "$.oracle", {"gamma_max", "step", "cap"});
    cfg.oracle.gamma_max = get_number(o, "$.oracle", "gamma_max", cfg.oracle.gamma_max);
    cfg.oracle.step = get_number(o, "$.oracle", "step", cfg.oracle.step);
    cfg.oracle.cap = get_number(o, "$.oracle", "cap", cfg.oracle.cap);
    if (cfg.oracle.step <= 0.0) fail("$.oracle.step", "must be > 0");
  }

  if (doc.contains("bargain")) {
    const json& b = doc.at("bargain");
    expect_keys(b, "$.bargain", {"criterion", "deltas"});
    if (b.contains("criterion")) {
      const json& v = b.at("criterion");
      if (!v.is_string() ||
          !criterion_from_string(v.get<std::string>(), cfg.bargain.criterion)) {
        fail("$.bargain.criterion", "expected utilitarian | nash | egalitarian");
      }
    }
    if (b.contains("deltas")) {
      cfg.bargain.delta_values = parse_delta_list(b.at("deltas"), "$.bargain.deltas");
      for (double d : cfg.bargain.delta_values) {
        if (d <= 0.0 || d >= 1.0) fail("$.bargain.deltas", "deltas must lie in (0,1)");
      }
    }
  }

  if (doc.contains("deltas")) {
    cfg.sweep_deltas = parse_delta_list(doc.at("deltas"), "$.deltas");
  }

  if (doc.contains("threads")) {
    const json& v = doc.at("threads");
    if (!v.is_number_integer() || v.get<int>() < 1) fail("$.threads", "expected an integer >= 1");
    cfg.threads = v.get<int>();
  }
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
      fail("$.seed", "expected a nonnegative integer");
    }
    if (v.is_number_integer() && v.get<long long>() < 0) {
      fail("$.seed", "expected a nonnegative integer");
    }
    cfg.seed = v.get<std::uint64_t>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace regame
