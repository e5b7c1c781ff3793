#ifndef HETNET_SCENARIO_HPP
#define HETNET_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/allocation.hpp"
#include "hetnet/association.hpp"
#include "hetnet/config.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/network.hpp"

namespace hetnet {

/// Frozen state of one drop: everything needed to evaluate rates.
struct DropRealization {
  std::uint64_t seed = 0;
  std::vector<BaseStation> stations;  // macros first
  int macro_count = 0;
  std::vector<UserTerminal> users;
  AccessMode access;
  AssociationOutcome association;
  AllocationMap allocation{{}, 0};
};

struct DropStats {
  int drop = 0;
  std::uint64_t seed = 0;
  int macros = 0;
  int femtos = 0;
  int users = 0;
  int admitted_macro = 0;
  int admitted_femto = 0;
  int denied = 0;
  int loaded_femtos = 0;
  std::size_t positive_samples = 0;
  bool empty = false;  // no positive rate; curve excluded from aggregation
};

struct DropResult {
  DropStats stats;
  std::vector<RateSample> samples;
};

/// Geometry, fragments, subscribers, association and allocation for one seed.
DropRealization realize_drop(const ScenarioConfig& config, std::uint64_t seed);

/// SINR and rate of every user; denied users get a Denied sample with rate 0.
std::vector<RateSample> evaluate_rates(const ScenarioConfig& config, const DropRealization& drop);

DropResult simulate_drop(const ScenarioConfig& config, int drop_index);

struct RunResult {
  ScenarioConfig config;
  DistributionCurve curve;
  std::vector<std::string> partition_labels;
  std::vector<std::optional<DistributionCurve>> partitions;  // parallel to labels
  std::vector<DropStats> drops;
  std::vector<std::string> warnings;
};

/// Runs config.n_drops independent drops on `threads` workers and aggregates.
/// Output is a function of the config alone, whatever the thread count.
RunResult run_scenario(const ScenarioConfig& config, int threads = 1);

}  // namespace hetnet

#endif  // HETNET_SCENARIO_HPP
