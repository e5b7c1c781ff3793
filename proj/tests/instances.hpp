// Random micro-instances shared by unit and acceptance tests.
#ifndef HETNET_TESTS_INSTANCES_HPP
#define HETNET_TESTS_INSTANCES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hetnet/allocation.hpp"
#include "hetnet/association.hpp"
#include "hetnet/network.hpp"
#include "hetnet/radio.hpp"
#include "oracles.hpp"

namespace instances {

using namespace hetnet;

/// Stations and users scattered on a square; macros first.
struct Layout {
  std::vector<BaseStation> stations;
  std::vector<UserTerminal> users;
};

inline Layout random_layout(RandomStream& rng, int macros, int femtos, int users, double side,
                            int total_prbs) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::uniform_int_distribution<int> len_dist(1, total_prbs);
  Layout out;
  for (int i = 0; i < macros + femtos; ++i) {
    const int len = len_dist(rng);
    std::uniform_int_distribution<int> start_dist(0, total_prbs - len);
    const bool macro = i < macros;
    out.stations.push_back({i, macro ? Tier::Macro : Tier::Femto, {u(rng), u(rng)},
                            macro ? 20.0 : 0.1, {start_dist(rng), len}});
  }
  for (int i = 0; i < users; ++i) out.users.push_back({i, {u(rng), u(rng)}});
  return out;
}

struct MicroInstance {
  Layout layout;
  int total_prbs = 0;
  AllocationMap alloc{{}, 0};
  std::vector<PrbSet> occupied;
};

/// Users attached to random stations (capacity respected), PRBs allocated.
inline MicroInstance random_micro_instance(RandomStream& rng) {
  std::uniform_int_distribution<int> n_bs(1, 5), n_u(1, 10), n_prb(1, 10);
  MicroInstance m;
  m.total_prbs = n_prb(rng);
  const int bs = n_bs(rng);
  std::uniform_int_distribution<int> n_macro(0, bs);
  const int macros = n_macro(rng);
  m.layout = random_layout(rng, macros, bs - macros, n_u(rng), 500.0, m.total_prbs);

  std::vector<std::vector<int>> admitted(m.layout.stations.size());
  std::uniform_int_distribution<int> pick(0, bs - 1);
  for (const auto& u : m.layout.users) {
    const int b = pick(rng);
    auto& list = admitted[static_cast<std::size_t>(b)];
    if (static_cast<int>(list.size()) < m.layout.stations[static_cast<std::size_t>(b)].prb_count()) {
      list.push_back(u.id);
    }
  }
  std::vector<StationAllocation> allocs;
  for (const auto& s : m.layout.stations) {
    allocs.push_back(allocate_prbs(s, admitted[static_cast<std::size_t>(s.id)], m.total_prbs, rng));
  }
  m.alloc = AllocationMap(std::move(allocs), static_cast<int>(m.layout.users.size()));
  m.occupied = m.alloc.occupied(m.layout.stations, Occupancy::AllocatedOnly, m.total_prbs);
  return m;
}

/// Largest relative SINR error against the per-PRB oracle over admitted users.
inline double sinr_oracle_error(const MicroInstance& m, const FadingField& fading,
                                const ChannelModel& channel) {
  const auto& st = m.layout.stations;
  std::vector<std::vector<double>> gain(m.layout.users.size(), std::vector<double>(st.size()));
  for (const auto& u : m.layout.users) {
    for (const auto& b : st) gain[static_cast<std::size_t>(u.id)][static_cast<std::size_t>(b.id)] = fading.gain(u.id, b.id);
  }
  std::vector<std::vector<int>> occ;
  for (const auto& o : m.occupied) occ.push_back(o.indices());

  double worst = 0.0;
  for (const auto& u : m.layout.users) {
    const int serving = m.alloc.serving(u.id);
    if (serving < 0) continue;
    const auto& bs = st[static_cast<std::size_t>(serving)];
    const double got = sinr(u, bs, st, m.alloc, m.occupied, fading, channel);
    const double want = oracle::sinr_per_prb(u, bs, st, m.alloc.prbs(u.id).indices(), occ, gain,
                                             channel.path_loss_exponent, channel.noise_power);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  return worst;
}

}  // namespace instances

#endif  // HETNET_TESTS_INSTANCES_HPP
