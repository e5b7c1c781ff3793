#ifndef HETNET_ALLOCATION_HPP
#define HETNET_ALLOCATION_HPP

#include <span>
#include <vector>

#include "hetnet/network.hpp"
#include "hetnet/random.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

/// PRBs one station hands to its admitted users.
struct StationAllocation {
  std::vector<int> users;     // admission order
  std::vector<int> alpha;     // PRB count per user, parallel to `users`
  std::vector<PrbSet> prbs;   // concrete indices per user, parallel to `users`
  PrbSet used;                // union of `prbs`
};

/// Fair split of the fragment: floor(N/n) PRBs each, and the N mod n leftover
/// PRBs (taken from the tail of the fragment) go one apiece to users picked
/// uniformly without replacement.
StationAllocation allocate_prbs(const BaseStation& bs, std::span<const int> admitted,
                                int total_prbs, RandomStream& rng);

/// Allocations for every station of a drop, with a user -> slot lookup.
class AllocationMap {
 public:
  AllocationMap(std::vector<StationAllocation> stations, int user_count);

  const StationAllocation& station(int bs_id) const { return stations_.at(static_cast<std::size_t>(bs_id)); }
  std::size_t station_count() const noexcept { return stations_.size(); }

  /// Serving station of a user, -1 if it holds no PRBs.
  int serving(int user_id) const { return slot_.at(static_cast<std::size_t>(user_id)).bs; }
  int alpha(int user_id) const;
  const PrbSet& prbs(int user_id) const;

  /// PRBs each station is treated as radiating on.
  std::vector<PrbSet> occupied(std::span<const BaseStation> stations, Occupancy model,
                               int total_prbs) const;

 private:
  struct Slot {
    int bs = -1;
    int index = -1;
  };
  std::vector<StationAllocation> stations_;
  std::vector<Slot> slot_;
};

}  // namespace hetnet

#endif  // HETNET_ALLOCATION_HPP
