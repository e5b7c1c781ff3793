// Reference implementations used only by tests. They follow the textbook
// definitions directly and share no code paths with the library internals.
#ifndef HETNET_TESTS_ORACLES_HPP
#define HETNET_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/network.hpp"

namespace oracle {

using hetnet::AccessPolicy;
using hetnet::BaseStation;
using hetnet::Point;
using hetnet::UserTerminal;

/// Lattice points i*a1 + j*a2 + origin inside [0,w]x[0,h], a1 = (d,0),
/// a2 = (d/2, d*sqrt(3)/2).
inline std::size_t count_lattice(double w, double h, double d, Point origin) {
  std::size_t n = 0;
  const int span = static_cast<int>(std::ceil(2.0 * (w + h) / d)) + 4;
  const double eps = 1e-9 * std::max(w, h);
  for (int i = -span; i <= span; ++i) {
    for (int j = -span; j <= span; ++j) {
      const double x = origin.x + i * d + j * 0.5 * d;
      const double y = origin.y + j * d * std::sqrt(3.0) / 2.0;
      if (x >= -eps && x <= w + eps && y >= -eps && y <= h + eps) ++n;
    }
  }
  return n;
}

inline double dist(Point a, Point b) {
  // Different arrangement from the library: sqrt of expanded squares.
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return std::max(1.0, std::sqrt(dy * dy + dx * dx));
}

inline double weight(const BaseStation& b, const hetnet::AssociationStrategy& s) {
  using K = hetnet::StrategyKind;
  const K kind = s.kind == K::TwoStepOffload ? s.offload_base : s.kind;
  const double bias = b.is_macro() ? s.bias_macro : s.bias_femto;
  if (kind == K::NearestBs) return 1.0;
  if (kind == K::MaxReceivedPower) return b.power;
  if (kind == K::CellRangeModification) return b.power * bias;
  return b.is_femto() ? b.power * s.bias_femto : b.power;  // femtocell range extension
}

inline double metric(const UserTerminal& u, const BaseStation& b, const hetnet::AssociationStrategy& s) {
  return weight(b, s) * std::pow(dist(u.position, b.position), -s.path_loss_exponent);
}

struct Outcome {
  std::vector<std::optional<int>> assignment;
  std::vector<std::vector<int>> admitted;
};

inline std::vector<int> admit(const BaseStation& bs, std::vector<std::pair<double, int>> req,
                              const hetnet::AccessMode& access, int cap) {
  // Sort key: (class, -metric, user). Class 0 competes first; class 2 is barred.
  std::vector<std::tuple<int, double, int>> keyed;
  for (auto [m, u] : req) {
    int cls = 0;
    if (bs.is_femto() && access.policy != AccessPolicy::Open) {
      const auto& subs = access.subscribers[static_cast<std::size_t>(bs.id)];
      const bool sub = std::find(subs.begin(), subs.end(), u) != subs.end();
      cls = sub ? 0 : (access.policy == AccessPolicy::Hybrid ? 1 : 2);
    }
    keyed.emplace_back(cls, -m, u);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& [cls, negm, u] : keyed) {
    if (cls == 2 || static_cast<int>(out.size()) >= cap) continue;
    out.push_back(u);
  }
  return out;
}

inline int argmax_station(const UserTerminal& u, const std::vector<BaseStation>& bss,
                          const hetnet::AssociationStrategy& s) {
  int best = -1;
  double bm = 0.0;
  for (const auto& b : bss) {
    const double m = metric(u, b, s);
    if (best < 0 || m > bm) {
      best = b.id;
      bm = m;
    }
  }
  return best;
}

inline Outcome associate(const std::vector<UserTerminal>& users, const std::vector<BaseStation>& bss,
                         const hetnet::AssociationStrategy& s, const std::vector<int>& caps,
                         const hetnet::AccessMode& access) {
  std::vector<std::vector<std::pair<double, int>>> req(bss.size());
  for (const auto& u : users) {
    const int k = argmax_station(u, bss, s);
    req[static_cast<std::size_t>(k)].push_back({metric(u, bss[static_cast<std::size_t>(k)], s), u.id});
  }
  Outcome o;
  o.assignment.assign(users.size(), std::nullopt);
  o.admitted.resize(bss.size());
  for (const auto& b : bss) {
    o.admitted[static_cast<std::size_t>(b.id)] = admit(b, req[static_cast<std::size_t>(b.id)], access, caps[static_cast<std::size_t>(b.id)]);
    for (int u : o.admitted[static_cast<std::size_t>(b.id)]) o.assignment[static_cast<std::size_t>(u)] = b.id;
  }
  return o;
}

inline Outcome two_step(const std::vector<UserTerminal>& users, const std::vector<BaseStation>& bss,
                        const hetnet::AssociationStrategy& s, const std::vector<int>& caps,
                        const hetnet::AccessMode& access) {
  std::vector<std::vector<std::pair<double, int>>> req(bss.size());
  for (const auto& u : users) {
    const int k = argmax_station(u, bss, s);
    req[static_cast<std::size_t>(k)].push_back({metric(u, bss[static_cast<std::size_t>(k)], s), u.id});
  }
  Outcome o;
  o.assignment.assign(users.size(), std::nullopt);
  o.admitted.resize(bss.size());
  for (const auto& b : bss) {
    if (!b.is_macro()) continue;
    auto& r = req[static_cast<std::size_t>(b.id)];
    auto adm = admit(b, r, access, caps[static_cast<std::size_t>(b.id)]);
    for (auto [m, u] : r) {
      if (std::find(adm.begin(), adm.end(), u) != adm.end()) continue;
      // closest femto
      int f = -1;
      double fd = 0.0;
      for (const auto& c : bss) {
        if (!c.is_femto()) continue;
        const double dd = dist(users[static_cast<std::size_t>(u)].position, c.position);
        if (f < 0 || dd < fd) {
          f = c.id;
          fd = dd;
        }
      }
      if (f >= 0) req[static_cast<std::size_t>(f)].push_back({metric(users[static_cast<std::size_t>(u)], bss[static_cast<std::size_t>(f)], s), u});
    }
    o.admitted[static_cast<std::size_t>(b.id)] = adm;
  }
  for (const auto& b : bss) {
    if (!b.is_femto()) continue;
    o.admitted[static_cast<std::size_t>(b.id)] = admit(b, req[static_cast<std::size_t>(b.id)], access, caps[static_cast<std::size_t>(b.id)]);
  }
  for (const auto& b : bss) {
    for (int u : o.admitted[static_cast<std::size_t>(b.id)]) o.assignment[static_cast<std::size_t>(u)] = b.id;
  }
  return o;
}

/// SINR by summing received power PRB by PRB over every (interferer, PRB)
/// pair. `occupied[b]` lists the PRBs station b radiates on.
inline double sinr_per_prb(const UserTerminal& u, const BaseStation& serving,
                           const std::vector<BaseStation>& bss, const std::vector<int>& user_prbs,
                           const std::vector<std::vector<int>>& occupied,
                           const std::vector<std::vector<double>>& gain, double exponent,
                           double noise) {
  auto pl = [&](const BaseStation& b) { return std::pow(dist(u.position, b.position), -exponent); };
  double signal = 0.0;
  for (std::size_t k = 0; k < user_prbs.size(); ++k) {
    signal += serving.power / serving.fragment.len * gain[static_cast<std::size_t>(u.id)][static_cast<std::size_t>(serving.id)] * pl(serving);
  }
  double interference = 0.0;
  for (int prb : user_prbs) {
    for (const auto& b : bss) {
      if (b.id == serving.id) continue;
      const auto& occ = occupied[static_cast<std::size_t>(b.id)];
      if (std::find(occ.begin(), occ.end(), prb) == occ.end()) continue;
      interference += b.power / b.fragment.len * gain[static_cast<std::size_t>(u.id)][static_cast<std::size_t>(b.id)] * pl(b);
    }
  }
  return signal / (interference + noise);
}

}  // namespace oracle

#endif  // HETNET_TESTS_ORACLES_HPP
