#ifndef HETNET_RADIO_HPP
#define HETNET_RADIO_HPP

#include <cstdint>
#include <span>

#include "hetnet/allocation.hpp"
#include "hetnet/network.hpp"
#include "hetnet/random.hpp"

namespace hetnet {

struct ChannelModel {
  double path_loss_exponent = 2.3;
  double noise_power = 1e-12;  // W, added once to the denominator
  bool fading = true;          // false: every gain is exactly 1

  void validate() const;
};

/// ||h||^2 for unit-variance Rayleigh amplitude: Exponential(1).
double sample_fading(RandomStream& rng);

/// Per (user, station) fading power gains for one drop. Each gain is a pure
/// function of (key, user, station), so evaluation order does not matter.
class FadingField {
 public:
  FadingField(std::uint64_t key, bool enabled) noexcept : key_(key), enabled_(enabled) {}

  double gain(int user_id, int bs_id) const noexcept;

 private:
  std::uint64_t key_;
  bool enabled_;
};

/// Received power per PRB, P/N_PRB * g * d^-a.
double per_prb_power(const BaseStation& bs, Point at, double gain, double path_loss_exponent);

/// SINR of an admitted user at its serving station. Every other station adds
/// interference in proportion to the overlap between the user's PRBs and that
/// station's occupied PRBs.
double sinr(const UserTerminal& user, const BaseStation& serving,
            std::span<const BaseStation> stations, const AllocationMap& alloc,
            std::span<const PrbSet> occupied, const FadingField& fading,
            const ChannelModel& channel);

/// Shannon rate over alpha PRBs, bits/s.
inline double rate(int alpha, double prb_bandwidth, double sinr_value) noexcept {
  return alpha * prb_bandwidth * std::log2(1.0 + sinr_value);
}

}  // namespace hetnet

#endif  // HETNET_RADIO_HPP
