#include "hetnet/association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace hetnet {

std::string_view to_string(Tier tier) noexcept { return tier == Tier::Macro ? "macro" : "femto"; }

std::string_view to_string(StrategyKind kind) noexcept {
  switch (kind) {
    case StrategyKind::NearestBs: return "nearest_bs";
    case StrategyKind::MaxReceivedPower: return "max_received_power";
    case StrategyKind::CellRangeModification: return "cell_range_modification";
    case StrategyKind::FemtocellRangeExtension: return "femtocell_range_extension";
    case StrategyKind::TwoStepOffload: return "two_step_offload";
  }
  return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept {
  for (auto kind : {StrategyKind::NearestBs, StrategyKind::MaxReceivedPower,
                    StrategyKind::CellRangeModification, StrategyKind::FemtocellRangeExtension,
                    StrategyKind::TwoStepOffload}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(AccessPolicy policy) noexcept {
  switch (policy) {
    case AccessPolicy::Open: return "open";
    case AccessPolicy::Closed: return "closed";
    case AccessPolicy::Hybrid: return "hybrid";
  }
  return "unknown";
}

std::optional<AccessPolicy> parse_access_policy(std::string_view name) noexcept {
  for (auto p : {AccessPolicy::Open, AccessPolicy::Closed, AccessPolicy::Hybrid}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void AssociationStrategy::validate() const {
  if (!(bias_macro > 0.0) || !(bias_femto > 0.0)) {
    throw std::invalid_argument("association biases must be positive");
  }
  if (!(path_loss_exponent > 0.0)) throw std::invalid_argument("path-loss exponent must be positive");
  if (offload_base == StrategyKind::TwoStepOffload) {
    throw std::invalid_argument("offload base strategy cannot itself be two_step_offload");
  }
}

double AssociationStrategy::weight(const BaseStation& bs) const noexcept {
  const StrategyKind k = kind == StrategyKind::TwoStepOffload ? offload_base : kind;
  switch (k) {
    case StrategyKind::NearestBs: return 1.0;
    case StrategyKind::MaxReceivedPower: return bs.power;
    case StrategyKind::CellRangeModification:
      return bs.power * (bs.is_macro() ? bias_macro : bias_femto);
    case StrategyKind::FemtocellRangeExtension: return bs.power * (bs.is_femto() ? bias_femto : 1.0);
    case StrategyKind::TwoStepOffload: break;
  }
  return 1.0;
}

double association_metric(const UserTerminal& user, const BaseStation& bs,
                          const AssociationStrategy& strategy) {
  return strategy.weight(bs) * std::pow(distance(user.position, bs.position), -strategy.path_loss_exponent);
}

bool AccessMode::is_subscriber(int bs_id, int user_id) const noexcept {
  if (bs_id < 0 || static_cast<std::size_t>(bs_id) >= subscribers.size()) return false;
  const auto& list = subscribers[static_cast<std::size_t>(bs_id)];
  return std::binary_search(list.begin(), list.end(), user_id);
}

int AssociationOutcome::admitted_count() const noexcept {
  int n = 0;
  for (const auto& a : assignment) n += a.has_value();
  return n;
}

int AssociationOutcome::denied_count() const noexcept {
  return static_cast<int>(assignment.size()) - admitted_count();
}

std::vector<int> fragment_capacities(std::span<const BaseStation> stations) {
  std::vector<int> caps;
  caps.reserve(stations.size());
  for (const auto& bs : stations) caps.push_back(bs.prb_count());
  return caps;
}

namespace {

void require_dense_ids(std::span<const BaseStation> stations, std::span<const int> capacities) {
  for (std::size_t i = 0; i < stations.size(); ++i) {
    if (stations[i].id != static_cast<int>(i)) {
      throw std::invalid_argument("station ids must equal their index");
    }
  }
  if (capacities.size() != stations.size()) {
    throw std::invalid_argument("one capacity per station is required");
  }
}

// argmax T*Z^-g == argmin Z^2 * T^(-2/g); avoids pow in the inner loop.
std::vector<double> range_scales(std::span<const BaseStation> stations,
                                 const AssociationStrategy& strategy) {
  std::vector<double> scales;
  scales.reserve(stations.size());
  for (const auto& bs : stations) {
    scales.push_back(std::pow(strategy.weight(bs), -2.0 / strategy.path_loss_exponent));
  }
  return scales;
}

template <typename Pred>
int best_station(Point at, std::span<const BaseStation> stations, std::span<const double> scales,
                 Pred eligible) {
  int best = -1;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < stations.size(); ++i) {
    if (!eligible(stations[i])) continue;
    const double cost = scales[i] * distance_squared(at, stations[i].position);
    if (cost < best_cost) {
      best_cost = cost;
      best = static_cast<int>(i);
    }
  }
  return best;
}

bool better(const Request& a, const Request& b) {
  if (a.metric != b.metric) return a.metric > b.metric;
  return a.user < b.user;
}

AssociationOutcome empty_outcome(std::size_t users, std::size_t stations) {
  AssociationOutcome out;
  out.assignment.assign(users, std::nullopt);
  out.per_bs_admitted.resize(stations);
  out.per_bs_denied.resize(stations);
  return out;
}

void admit_at(AssociationOutcome& out, const BaseStation& bs, std::span<const Request> requests,
              const AccessMode& access, int capacity) {
  auto result = apply_access_control(bs, requests, access, capacity);
  for (int u : result.admitted) out.assignment[static_cast<std::size_t>(u)] = bs.id;
  out.per_bs_admitted[static_cast<std::size_t>(bs.id)] = std::move(result.admitted);
  out.per_bs_denied[static_cast<std::size_t>(bs.id)] = std::move(result.denied);
}

}  // namespace

int requested_station(const UserTerminal& user, std::span<const BaseStation> stations,
                      const AssociationStrategy& strategy) {
  int best = -1;
  double best_metric = -1.0;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const double m = association_metric(user, stations[i], strategy);
    if (best < 0 || m > best_metric || (m == best_metric && stations[i].id < stations[static_cast<std::size_t>(best)].id)) {
      best_metric = m;
      best = static_cast<int>(i);
    }
  }
  return best < 0 ? -1 : stations[static_cast<std::size_t>(best)].id;
}

AdmissionResult apply_access_control(const BaseStation& bs, std::span<const Request> requests,
                                     const AccessMode& access, int capacity) {
  std::vector<Request> sorted(requests.begin(), requests.end());
  std::sort(sorted.begin(), sorted.end(), better);

  AdmissionResult out;
  const auto slots = static_cast<std::size_t>(std::max(capacity, 0));
  const bool screened = bs.is_femto() && access.policy != AccessPolicy::Open;
  if (!screened) {
    for (const auto& r : sorted) (out.admitted.size() < slots ? out.admitted : out.denied).push_back(r.user);
    return out;
  }

  std::vector<int> subs;
  std::vector<int> others;
  for (const auto& r : sorted) (access.is_subscriber(bs.id, r.user) ? subs : others).push_back(r.user);

  for (int u : subs) (out.admitted.size() < slots ? out.admitted : out.denied).push_back(u);
  if (access.policy == AccessPolicy::Closed) {
    out.denied.insert(out.denied.end(), others.begin(), others.end());
  } else {
    for (int u : others) (out.admitted.size() < slots ? out.admitted : out.denied).push_back(u);
  }
  return out;
}

AssociationOutcome associate(std::span<const UserTerminal> users,
                             std::span<const BaseStation> stations,
                             const AssociationStrategy& strategy, std::span<const int> capacities,
                             const AccessMode& access) {
  require_dense_ids(stations, capacities);
  auto out = empty_outcome(users.size(), stations.size());
  if (stations.empty()) return out;

  const auto scales = range_scales(stations, strategy);
  std::vector<std::vector<Request>> requests(stations.size());
  for (const auto& user : users) {
    const int k = best_station(user.position, stations, scales, [](const BaseStation&) { return true; });
    const auto& bs = stations[static_cast<std::size_t>(k)];
    requests[static_cast<std::size_t>(k)].push_back({user.id, association_metric(user, bs, strategy)});
  }
  for (const auto& bs : stations) {
    admit_at(out, bs, requests[static_cast<std::size_t>(bs.id)], access,
             capacities[static_cast<std::size_t>(bs.id)]);
  }
  return out;
}

AssociationOutcome two_step_offload(std::span<const UserTerminal> users,
                                    std::span<const BaseStation> stations,
                                    const AssociationStrategy& strategy,
                                    std::span<const int> capacities, const AccessMode& access) {
  require_dense_ids(stations, capacities);
  auto out = empty_outcome(users.size(), stations.size());
  if (stations.empty()) return out;

  const auto scales = range_scales(stations, strategy);
  std::vector<std::vector<Request>> requests(stations.size());
  for (const auto& user : users) {
    const int k = best_station(user.position, stations, scales, [](const BaseStation&) { return true; });
    const auto& bs = stations[static_cast<std::size_t>(k)];
    requests[static_cast<std::size_t>(k)].push_back({user.id, association_metric(user, bs, strategy)});
  }

  // Step 1: macros keep their best N_PRB,m requesters.
  std::vector<int> overflow;
  for (const auto& bs : stations) {
    if (!bs.is_macro()) continue;
    const auto id = static_cast<std::size_t>(bs.id);
    auto result = apply_access_control(bs, requests[id], access, capacities[id]);
    for (int u : result.admitted) out.assignment[static_cast<std::size_t>(u)] = bs.id;
    out.per_bs_admitted[id] = std::move(result.admitted);
    overflow.insert(overflow.end(), result.denied.begin(), result.denied.end());
  }

  // Step 2: overflow users join the contention at their closest femto.
  const std::vector<double> unit(stations.size(), 1.0);
  for (int u : overflow) {
    const auto& user = users[static_cast<std::size_t>(u)];
    const int f = best_station(user.position, stations, unit,
                               [](const BaseStation& bs) { return bs.is_femto(); });
    if (f < 0) {
      // No femto tier: the user stays denied at its macro.
      const int m = best_station(user.position, stations, scales, [](const BaseStation&) { return true; });
      out.per_bs_denied[static_cast<std::size_t>(m)].push_back(u);
      continue;
    }
    const auto& fbs = stations[static_cast<std::size_t>(f)];
    requests[static_cast<std::size_t>(f)].push_back({u, association_metric(user, fbs, strategy)});
  }

  for (const auto& bs : stations) {
    if (!bs.is_femto()) continue;
    admit_at(out, bs, requests[static_cast<std::size_t>(bs.id)], access,
             capacities[static_cast<std::size_t>(bs.id)]);
  }
  return out;
}

std::vector<std::vector<int>> build_subscriber_lists(std::span<const BaseStation> stations,
                                                     std::span<const UserTerminal> users,
                                                     double radius, int per_femto,
                                                     RandomStream& rng) {
  if (!(radius > 0.0)) throw std::invalid_argument("subscriber radius must be positive");
  std::vector<std::vector<int>> lists(stations.size());
  if (per_femto <= 0 || users.empty()) return lists;

  // Users bucketed on a square grid of cell size `radius`.
  auto cell_of = [radius](double v) { return static_cast<long long>(std::floor(v / radius)); };
  auto key = [](long long cx, long long cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
  std::unordered_map<long long, std::vector<int>> buckets;
  for (const auto& u : users) buckets[key(cell_of(u.position.x), cell_of(u.position.y))].push_back(u.id);

  const double r2 = radius * radius;
  std::vector<int> candidates;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const auto& bs = stations[i];
    if (!bs.is_femto()) continue;
    candidates.clear();
    const long long cx = cell_of(bs.position.x);
    const long long cy = cell_of(bs.position.y);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find(key(cx + dx, cy + dy));
        if (it == buckets.end()) continue;
        for (int uid : it->second) {
          const Point p = users[static_cast<std::size_t>(uid)].position;
          const double ddx = p.x - bs.position.x;
          const double ddy = p.y - bs.position.y;
          if (ddx * ddx + ddy * ddy <= r2) candidates.push_back(uid);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    auto& chosen = lists[i];
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(chosen),
                static_cast<std::size_t>(per_femto), rng);
    std::sort(chosen.begin(), chosen.end());
  }
  return lists;
}

}  // namespace hetnet
