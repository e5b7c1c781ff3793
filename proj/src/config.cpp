#include "hetnet/config.hpp"
#include "hetnet/metrics.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hetnet {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(std::string(key), std::string(key) + ": expected a number, got '" + s + "'");
  }
  return v;
}

long long parse_integer(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError(std::string(key), std::string(key) + ": expected an integer, got '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  const long long v = parse_integer(key, text);
  if (v < -2147483647LL || v > 2147483647LL) {
    throw ConfigError(std::string(key), std::string(key) + ": value out of range");
  }
  return static_cast<int>(v);
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  if (s == "on" || s == "true" || s == "1") return true;
  if (s == "off" || s == "false" || s == "0") return false;
  throw ConfigError(std::string(key), std::string(key) + ": expected on/off, got '" + s + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(std::string_view key, const std::string& message) {
  throw ConfigError(std::string(key), message);
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "area_width",      "area_height",      "inter_site_distance", "grid_anchor_x",
      "grid_anchor_y",   "total_prbs",       "prb_bandwidth",       "macro_power_dbm",
      "femto_power_dbm", "K",                "n_f",                 "N_f",
      "lambda_f",        "N_u",              "lambda_u",            "path_loss_exponent",
      "association_exponent", "noise_power", "fading",              "strategy",
      "offload_base",    "bias_macro",       "bias_femto",          "access_mode",
      "subscriber_radius", "subscriber_count", "occupancy",         "psi_population",
      "n_drops",
      "base_seed",       "delta_min",        "delta_max",           "delta_points",
      "deltas",
  };
  return keys;
}

double ScenarioConfig::femto_mean_count() const noexcept {
  return femto_intensity ? *femto_intensity * area().size() : femto_mean.value_or(0.0);
}

double ScenarioConfig::user_mean_count() const noexcept {
  return user_intensity ? *user_intensity * area().size() : user_mean.value_or(0.0);
}

double ScenarioConfig::macro_power() const noexcept { return dbm_to_watts(macro_power_dbm); }
double ScenarioConfig::femto_power() const noexcept { return dbm_to_watts(femto_power_dbm); }

AssociationStrategy ScenarioConfig::association_strategy() const noexcept {
  AssociationStrategy s;
  s.kind = strategy;
  s.offload_base = offload_base;
  s.bias_macro = bias_macro;
  s.bias_femto = bias_femto.value_or(macro_power() / femto_power());
  s.path_loss_exponent = association_exponent.value_or(path_loss_exponent);
  return s;
}

std::vector<double> ScenarioConfig::delta_grid() const {
  if (!deltas.empty()) return deltas;
  return log_grid(delta_min, delta_max, delta_points);
}

void ScenarioConfig::validate() const {
  if (!(area_width > 0.0)) fail("area_width", "area_width must be positive");
  if (!(area_height > 0.0)) fail("area_height", "area_height must be positive");
  if (!(inter_site_distance > 0.0)) fail("inter_site_distance", "inter_site_distance must be positive");
  if (inter_site_distance > area_width || inter_site_distance > area_height) {
    fail("inter_site_distance", "inter_site_distance must not exceed the area dimensions");
  }
  if (total_prbs <= 0) fail("total_prbs", "total_prbs must be positive");
  if (!(prb_bandwidth > 0.0)) fail("prb_bandwidth", "prb_bandwidth must be positive");
  if (reuse_factor <= 0 || total_prbs % reuse_factor != 0) fail("K", "K must divide total_prbs");
  if (femto_fragments <= 0 || total_prbs % femto_fragments != 0) {
    fail("n_f", "n_f must divide total_prbs");
  }
  if (femto_mean && femto_intensity) fail("lambda_f", "set only one of N_f and lambda_f");
  if (user_mean && user_intensity) fail("lambda_u", "set only one of N_u and lambda_u");
  if (!(femto_mean_count() >= 0.0)) fail(femto_intensity ? "lambda_f" : "N_f", "femto density must be non-negative");
  if (!(user_mean_count() > 0.0)) fail(user_intensity ? "lambda_u" : "N_u", "user density must be positive");
  if (!(path_loss_exponent > 0.0)) fail("path_loss_exponent", "path_loss_exponent must be positive");
  if (association_exponent && !(*association_exponent > 0.0)) {
    fail("association_exponent", "association_exponent must be positive");
  }
  if (!(noise_power > 0.0)) fail("noise_power", "noise_power must be positive");
  if (offload_base == StrategyKind::TwoStepOffload) {
    fail("offload_base", "offload_base must be a single-step strategy");
  }
  if (!(bias_macro > 0.0)) fail("bias_macro", "bias_macro must be positive");
  if (bias_femto && !(*bias_femto > 0.0)) fail("bias_femto", "bias_femto must be positive");
  if (!(subscriber_radius > 0.0)) fail("subscriber_radius", "subscriber_radius must be positive");
  if (subscriber_count < 0) fail("subscriber_count", "subscriber_count must be non-negative");
  if (n_drops <= 0) fail("n_drops", "n_drops must be positive");
  if (deltas.empty()) {
    if (!(delta_min > 0.0) || !(delta_max > delta_min)) fail("delta_min", "need 0 < delta_min < delta_max");
    if (delta_points < 2) fail("delta_points", "delta_points must be at least 2");
  } else if (!std::is_sorted(deltas.begin(), deltas.end()) || deltas.front() < 0.0) {
    fail("deltas", "deltas must be non-negative and ascending");
  }
  try {
    build_macro_grid(area(), inter_site_distance, grid_anchor);
  } catch (const InvalidDimension& e) {
    fail("inter_site_distance", e.what());
  }
}

void set_config_value(ScenarioConfig& c, std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  if (key == "area_width") c.area_width = parse_double(key, v);
  else if (key == "area_height") c.area_height = parse_double(key, v);
  else if (key == "inter_site_distance") c.inter_site_distance = parse_double(key, v);
  else if (key == "grid_anchor_x") c.grid_anchor.dx = parse_double(key, v);
  else if (key == "grid_anchor_y") c.grid_anchor.dy = parse_double(key, v);
  else if (key == "total_prbs") c.total_prbs = parse_int(key, v);
  else if (key == "prb_bandwidth") c.prb_bandwidth = parse_double(key, v);
  else if (key == "macro_power_dbm") c.macro_power_dbm = parse_double(key, v);
  else if (key == "femto_power_dbm") c.femto_power_dbm = parse_double(key, v);
  else if (key == "K") c.reuse_factor = parse_int(key, v);
  else if (key == "n_f") c.femto_fragments = parse_int(key, v);
  else if (key == "N_f") { c.femto_mean = parse_double(key, v); c.femto_intensity.reset(); }
  else if (key == "lambda_f") { c.femto_intensity = parse_double(key, v); c.femto_mean.reset(); }
  else if (key == "N_u") { c.user_mean = parse_double(key, v); c.user_intensity.reset(); }
  else if (key == "lambda_u") { c.user_intensity = parse_double(key, v); c.user_mean.reset(); }
  else if (key == "path_loss_exponent") c.path_loss_exponent = parse_double(key, v);
  else if (key == "association_exponent") c.association_exponent = parse_double(key, v);
  else if (key == "noise_power") c.noise_power = parse_double(key, v);
  else if (key == "fading") c.fading = parse_bool(key, v);
  else if (key == "strategy" || key == "offload_base") {
    auto kind = parse_strategy(v);
    if (!kind) fail(key, std::string(key) + ": unknown strategy '" + v + "'");
    (key == "strategy" ? c.strategy : c.offload_base) = *kind;
  }
  else if (key == "bias_macro") c.bias_macro = parse_double(key, v);
  else if (key == "bias_femto") c.bias_femto = parse_double(key, v);
  else if (key == "access_mode") {
    auto p = parse_access_policy(v);
    if (!p) fail(key, "access_mode: expected open, closed or hybrid, got '" + v + "'");
    c.access = *p;
  }
  else if (key == "subscriber_radius") c.subscriber_radius = parse_double(key, v);
  else if (key == "subscriber_count") c.subscriber_count = parse_int(key, v);
  else if (key == "occupancy") {
    if (v == "allocated_only") c.occupancy = Occupancy::AllocatedOnly;
    else if (v == "whole_fragment") c.occupancy = Occupancy::WholeFragment;
    else fail(key, "occupancy: expected allocated_only or whole_fragment, got '" + v + "'");
  }
  else if (key == "psi_population") {
    if (v == "associated") c.psi_population = PsiPopulation::Associated;
    else if (v == "all_users") c.psi_population = PsiPopulation::AllUsers;
    else fail(key, "psi_population: expected associated or all_users, got '" + v + "'");
  }
  else if (key == "n_drops") c.n_drops = parse_int(key, v);
  else if (key == "base_seed") {
    const long long s = parse_integer(key, v);
    if (s < 0) fail(key, "base_seed must be non-negative");
    c.base_seed = static_cast<std::uint64_t>(s);
  }
  else if (key == "delta_min") c.delta_min = parse_double(key, v);
  else if (key == "delta_max") c.delta_max = parse_double(key, v);
  else if (key == "delta_points") c.delta_points = parse_int(key, v);
  else if (key == "deltas") {
    c.deltas.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) c.deltas.push_back(parse_double(key, item));
  }
  else fail(key, "unknown config key '" + std::string(key) + "'");
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig c;
  std::vector<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      fail("", "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      fail(key, "duplicate config key '" + key + "'");
    }
    seen.push_back(key);
    set_config_value(c, key, std::string_view(t).substr(eq + 1));
  }
  auto has = [&](std::string_view k) { return std::find(seen.begin(), seen.end(), k) != seen.end(); };
  if (has("N_f") && has("lambda_f")) fail("lambda_f", "set only one of N_f and lambda_f");
  if (has("N_u") && has("lambda_u")) fail("lambda_u", "set only one of N_u and lambda_u");
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  return parse_config(in);
}

std::string config_to_text(const ScenarioConfig& c) {
  std::ostringstream o;
  auto put = [&o](std::string_view k, const std::string& v) { o << k << " = " << v << '\n'; };
  put("area_width", fmt(c.area_width));
  put("area_height", fmt(c.area_height));
  put("inter_site_distance", fmt(c.inter_site_distance));
  put("grid_anchor_x", fmt(c.grid_anchor.dx));
  put("grid_anchor_y", fmt(c.grid_anchor.dy));
  put("total_prbs", std::to_string(c.total_prbs));
  put("prb_bandwidth", fmt(c.prb_bandwidth));
  put("macro_power_dbm", fmt(c.macro_power_dbm));
  put("femto_power_dbm", fmt(c.femto_power_dbm));
  put("K", std::to_string(c.reuse_factor));
  put("n_f", std::to_string(c.femto_fragments));
  if (c.femto_intensity) put("lambda_f", fmt(*c.femto_intensity));
  else put("N_f", fmt(c.femto_mean.value_or(0.0)));
  if (c.user_intensity) put("lambda_u", fmt(*c.user_intensity));
  else put("N_u", fmt(c.user_mean.value_or(0.0)));
  put("path_loss_exponent", fmt(c.path_loss_exponent));
  if (c.association_exponent) put("association_exponent", fmt(*c.association_exponent));
  put("noise_power", fmt(c.noise_power));
  put("fading", c.fading ? "on" : "off");
  put("strategy", std::string(to_string(c.strategy)));
  put("offload_base", std::string(to_string(c.offload_base)));
  put("bias_macro", fmt(c.bias_macro));
  if (c.bias_femto) put("bias_femto", fmt(*c.bias_femto));
  put("access_mode", std::string(to_string(c.access)));
  put("subscriber_radius", fmt(c.subscriber_radius));
  put("subscriber_count", std::to_string(c.subscriber_count));
  put("occupancy", c.occupancy == Occupancy::AllocatedOnly ? "allocated_only" : "whole_fragment");
  put("psi_population", c.psi_population == PsiPopulation::Associated ? "associated" : "all_users");
  put("n_drops", std::to_string(c.n_drops));
  put("base_seed", std::to_string(c.base_seed));
  put("delta_min", fmt(c.delta_min));
  put("delta_max", fmt(c.delta_max));
  put("delta_points", std::to_string(c.delta_points));
  if (!c.deltas.empty()) {
    std::string s;
    for (std::size_t i = 0; i < c.deltas.size(); ++i) s += (i ? "," : "") + fmt(c.deltas[i]);
    put("deltas", s);
  }
  return o.str();
}

}  // namespace hetnet
