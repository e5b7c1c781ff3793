#include "hetnet/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hetnet {

StationAllocation allocate_prbs(const BaseStation& bs, std::span<const int> admitted,
                                int total_prbs, RandomStream& rng) {
  StationAllocation out;
  out.used = PrbSet(total_prbs);
  const int n_users = static_cast<int>(admitted.size());
  if (n_users == 0) return out;
  const int n_prbs = bs.prb_count();
  if (n_users > n_prbs) {
    throw std::invalid_argument("more admitted users than PRBs at station " + std::to_string(bs.id));
  }

  const int base = n_prbs / n_users;
  const int extra = n_prbs % n_users;

  out.users.assign(admitted.begin(), admitted.end());
  out.alpha.assign(static_cast<std::size_t>(n_users), base);
  out.prbs.assign(static_cast<std::size_t>(n_users), PrbSet(total_prbs));

  for (int k = 0; k < n_users; ++k) {
    out.prbs[static_cast<std::size_t>(k)].insert(Fragment{bs.fragment.start + k * base, base});
  }

  if (extra > 0) {
    std::vector<int> order(static_cast<std::size_t>(n_users));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> lucky;
    lucky.reserve(static_cast<std::size_t>(extra));
    std::sample(order.begin(), order.end(), std::back_inserter(lucky), static_cast<std::size_t>(extra), rng);
    int tail = bs.fragment.start + n_users * base;
    for (int k : lucky) {
      out.alpha[static_cast<std::size_t>(k)] += 1;
      out.prbs[static_cast<std::size_t>(k)].insert(tail++);
    }
  }

  for (const auto& s : out.prbs) out.used |= s;
  return out;
}

AllocationMap::AllocationMap(std::vector<StationAllocation> stations, int user_count)
    : stations_(std::move(stations)), slot_(static_cast<std::size_t>(std::max(user_count, 0))) {
  for (std::size_t b = 0; b < stations_.size(); ++b) {
    const auto& st = stations_[b];
    for (std::size_t k = 0; k < st.users.size(); ++k) {
      auto& slot = slot_.at(static_cast<std::size_t>(st.users[k]));
      if (slot.bs >= 0) throw std::invalid_argument("user allocated at two stations");
      slot = {static_cast<int>(b), static_cast<int>(k)};
    }
  }
}

int AllocationMap::alpha(int user_id) const {
  const auto& s = slot_.at(static_cast<std::size_t>(user_id));
  if (s.bs < 0) return 0;
  return stations_[static_cast<std::size_t>(s.bs)].alpha[static_cast<std::size_t>(s.index)];
}

const PrbSet& AllocationMap::prbs(int user_id) const {
  const auto& s = slot_.at(static_cast<std::size_t>(user_id));
  if (s.bs < 0) throw std::out_of_range("user holds no PRBs");
  return stations_[static_cast<std::size_t>(s.bs)].prbs[static_cast<std::size_t>(s.index)];
}

std::vector<PrbSet> AllocationMap::occupied(std::span<const BaseStation> stations, Occupancy model,
                                            int total_prbs) const {
  std::vector<PrbSet> out;
  out.reserve(stations.size());
  for (const auto& bs : stations) {
    if (model == Occupancy::WholeFragment) {
      out.emplace_back(total_prbs, bs.fragment);
    } else if (static_cast<std::size_t>(bs.id) < stations_.size()) {
      out.push_back(stations_[static_cast<std::size_t>(bs.id)].used);
    } else {
      out.emplace_back(total_prbs);
    }
  }
  return out;
}

}  // namespace hetnet
