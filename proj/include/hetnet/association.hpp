#ifndef HETNET_ASSOCIATION_HPP
#define HETNET_ASSOCIATION_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hetnet/network.hpp"
#include "hetnet/random.hpp"

namespace hetnet {

enum class StrategyKind {
  NearestBs,
  MaxReceivedPower,
  CellRangeModification,
  FemtocellRangeExtension,
  TwoStepOffload,
};

std::string_view to_string(StrategyKind kind) noexcept;
std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept;

/// Association weight T_i and path-loss exponent of the rule
/// k = argmax_i T_i * Z_i^-gamma.
///
/// TwoStepOffload ranks with the weight of `offload_base` in both of its steps.
struct AssociationStrategy {
  StrategyKind kind = StrategyKind::NearestBs;
  double bias_macro = 1.0;
  double bias_femto = 1.0;
  double path_loss_exponent = 2.3;
  StrategyKind offload_base = StrategyKind::MaxReceivedPower;

  void validate() const;
  /// T_i for the given station.
  double weight(const BaseStation& bs) const noexcept;
};

/// T_i * Z^-gamma with Z the clamped user-to-station distance.
double association_metric(const UserTerminal& user, const BaseStation& bs,
                          const AssociationStrategy& strategy);

enum class AccessPolicy { Open, Closed, Hybrid };

std::string_view to_string(AccessPolicy policy) noexcept;
std::optional<AccessPolicy> parse_access_policy(std::string_view name) noexcept;

/// Femto access control. `subscribers` is indexed by base station id and
/// holds ascending user ids; macro entries stay empty.
struct AccessMode {
  AccessPolicy policy = AccessPolicy::Open;
  std::vector<std::vector<int>> subscribers;

  bool is_subscriber(int bs_id, int user_id) const noexcept;
};

/// Per-station subscriber lists: up to `per_femto` users drawn uniformly
/// without replacement among users within `radius` of each femto.
std::vector<std::vector<int>> build_subscriber_lists(std::span<const BaseStation> stations,
                                                     std::span<const UserTerminal> users,
                                                     double radius, int per_femto,
                                                     RandomStream& rng);

/// A user asking one station for admission, carrying its rule value there.
struct Request {
  int user = 0;
  double metric = 0.0;
};

struct AdmissionResult {
  std::vector<int> admitted;  // best first
  std::vector<int> denied;
};

/// Capacity-limited admission at one station. Macros and open femtos admit the
/// top `capacity` requesters by metric; closed femtos consider subscribers
/// only; hybrid femtos fill slots with subscribers first, then others.
/// Ties go to the lower user id.
AdmissionResult apply_access_control(const BaseStation& bs, std::span<const Request> requests,
                                     const AccessMode& access, int capacity);

struct AssociationOutcome {
  std::vector<std::optional<int>> assignment;    // per user: serving station or denied
  std::vector<std::vector<int>> per_bs_admitted;  // per station, best first
  std::vector<std::vector<int>> per_bs_denied;

  int admitted_count() const noexcept;
  int denied_count() const noexcept;
};

/// Station the user asks for under the rule, lowest id on ties; -1 when
/// `stations` is empty.
int requested_station(const UserTerminal& user, std::span<const BaseStation> stations,
                      const AssociationStrategy& strategy);

/// Single-round association: every user requests its argmax station, each
/// station admits per `apply_access_control`.
AssociationOutcome associate(std::span<const UserTerminal> users,
                             std::span<const BaseStation> stations,
                             const AssociationStrategy& strategy, std::span<const int> capacities,
                             const AccessMode& access);

/// Proactive macro-to-femto offloading. Users request per the general rule;
/// a macro with more requesters than capacity keeps the best ones and forwards
/// the rest to their geometrically closest femto, where they contend with that
/// femto's direct requesters under the same rule and access control.
AssociationOutcome two_step_offload(std::span<const UserTerminal> users,
                                    std::span<const BaseStation> stations,
                                    const AssociationStrategy& strategy,
                                    std::span<const int> capacities, const AccessMode& access);

/// Capacity of every station: its fragment length.
std::vector<int> fragment_capacities(std::span<const BaseStation> stations);

}  // namespace hetnet

#endif  // HETNET_ASSOCIATION_HPP
