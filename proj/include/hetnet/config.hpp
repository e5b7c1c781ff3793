#ifndef HETNET_CONFIG_HPP
#define HETNET_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

/// Bad config value or key; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// One simulated scenario. Defaults are the reference macro/femto setup:
/// 25 x 25 km, 15 MHz (75 PRBs), 43/20 dBm, 5 km spacing, K = 3.
struct ScenarioConfig {
  double area_width = 25'000.0;
  double area_height = 25'000.0;
  double inter_site_distance = 5'000.0;
  GridAnchor grid_anchor = GridAnchor::between_rows();

  int total_prbs = 75;
  double prb_bandwidth = 180e3;
  double macro_power_dbm = 43.0;
  double femto_power_dbm = 20.0;
  int reuse_factor = 3;     // K
  int femto_fragments = 1;  // n_f

  // Exactly one of each pair; mean counts win when both are unset.
  std::optional<double> femto_mean = 500.0;  // N_f
  std::optional<double> femto_intensity;     // lambda_f, per m^2
  std::optional<double> user_mean = 10'000.0;
  std::optional<double> user_intensity;

  double path_loss_exponent = 2.3;
  std::optional<double> association_exponent;  // defaults to path_loss_exponent
  double noise_power = 1e-12;
  bool fading = true;

  StrategyKind strategy = StrategyKind::NearestBs;
  StrategyKind offload_base = StrategyKind::MaxReceivedPower;
  double bias_macro = 1.0;
  std::optional<double> bias_femto;  // defaults to P_m / P_f

  AccessPolicy access = AccessPolicy::Open;
  double subscriber_radius = 18.0;
  int subscriber_count = 3;
  Occupancy occupancy = Occupancy::AllocatedOnly;

  PsiPopulation psi_population = PsiPopulation::Associated;

  int n_drops = 20;
  std::uint64_t base_seed = 1;

  double delta_min = 1e4;
  double delta_max = 2e7;
  int delta_points = 50;
  std::vector<double> deltas;  // explicit grid overrides the log grid

  Area area() const noexcept { return {area_width, area_height}; }
  PrbPool pool() const noexcept { return {total_prbs, prb_bandwidth}; }
  double femto_mean_count() const noexcept;
  double user_mean_count() const noexcept;
  double macro_power() const noexcept;
  double femto_power() const noexcept;
  AssociationStrategy association_strategy() const noexcept;
  std::vector<double> delta_grid() const;

  /// Throws ConfigError naming the first offending key.
  void validate() const;
};

/// Known keys, in canonical order.
const std::vector<std::string_view>& config_keys();

/// Assigns one key from its textual value. Throws ConfigError on unknown keys
/// or unparsable values.
void set_config_value(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` text, `#` comments, blank lines ignored.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical `key = value` echo of every key; parse_config(echo) round-trips.
std::string config_to_text(const ScenarioConfig& config);

}  // namespace hetnet

#endif  // HETNET_CONFIG_HPP
