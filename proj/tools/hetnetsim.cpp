// hetnetsim: Monte Carlo rate-distribution runs for a two-tier macro/femto
// downlink.
//
//   hetnetsim run <config> [--out DIR] [--drops N] [--seed S] [--threads T]
//   hetnetsim sweep <config> --vary key=v1,v2,... [--out DIR] [...]
//   hetnetsim validate <config>
//
// Exit status: 0 success, 1 usage or config error, 2 runtime failure.
// HETNET_THREADS sets the default worker count.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hetnet/config.hpp"
#include "hetnet/output.hpp"
#include "hetnet/scenario.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

int default_threads() {
  if (const char* env = std::getenv("HETNET_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Overrides {
  int drops = 0;
  long long seed = -1;
  int threads = 0;
};

void apply(hetnet::ScenarioConfig& config, const Overrides& o) {
  if (o.drops > 0) hetnet::set_config_value(config, "n_drops", std::to_string(o.drops));
  if (o.seed >= 0) hetnet::set_config_value(config, "base_seed", std::to_string(o.seed));
}

std::string file_safe(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_') c = '_';
  }
  return s;
}

void report(const hetnet::RunResult& result) {
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier macro/femto downlink rate-distribution simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string vary;
  Overrides overrides;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "scenario config file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--drops", overrides.drops, "number of drops (overrides n_drops)");
    sub->add_option("--seed", overrides.seed, "base seed (overrides base_seed)");
    sub->add_option("--threads", overrides.threads, "worker threads (default $HETNET_THREADS)");
  };

  auto* run = app.add_subcommand("run", "simulate one scenario");
  add_common(run);
  auto* sweep = app.add_subcommand("sweep", "simulate one scenario per value of a key");
  add_common(sweep);
  sweep->add_option("--vary", vary, "key=v1,v2,...")->required();
  auto* validate = app.add_subcommand("validate", "check a config file");
  validate->add_option("config", config_path, "scenario config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  hetnet::ScenarioConfig config;
  try {
    config = hetnet::load_config(config_path);
    apply(config, overrides);
    config.validate();
  } catch (const hetnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  if (*validate) {
    std::cout << "ok\n";
    return kOk;
  }

  const int threads = overrides.threads > 0 ? overrides.threads : default_threads();
  try {
    if (*run) {
      const auto result = hetnet::run_scenario(config, threads);
      hetnet::write_run(out_dir, "curve", result);
      report(result);
      return kOk;
    }

    const auto eq = vary.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == vary.size()) {
      std::cerr << "config error: --vary expects key=v1,v2,...\n";
      return kConfigError;
    }
    const std::string key = vary.substr(0, eq);
    std::vector<std::string> values;
    std::stringstream ss(vary.substr(eq + 1));
    for (std::string v; std::getline(ss, v, ',');) values.push_back(v);

    std::vector<hetnet::ScenarioConfig> configs;
    try {
      for (const auto& v : values) {
        auto c = config;
        hetnet::set_config_value(c, key, v);
        c.validate();
        configs.push_back(std::move(c));
      }
    } catch (const hetnet::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kConfigError;
    }
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const auto result = hetnet::run_scenario(configs[i], threads);
      hetnet::write_run(out_dir, "curve_" + file_safe(key) + "_" + file_safe(values[i]), result);
      report(result);
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
