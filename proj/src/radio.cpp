#include "hetnet/radio.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hetnet {

void ChannelModel::validate() const {
  if (!(path_loss_exponent > 0.0)) throw std::invalid_argument("path_loss_exponent must be positive");
  if (!(noise_power > 0.0)) throw std::invalid_argument("noise_power must be positive");
}

double sample_fading(RandomStream& rng) {
  std::exponential_distribution<double> exp1(1.0);
  return exp1(rng);
}

double FadingField::gain(int user_id, int bs_id) const noexcept {
  if (!enabled_) return 1.0;
  // Inverse-CDF draw of Exponential(1).
  return -std::log(counter_uniform(key_, static_cast<std::uint64_t>(user_id),
                                   static_cast<std::uint64_t>(bs_id)));
}

double per_prb_power(const BaseStation& bs, Point at, double gain, double path_loss_exponent) {
  const double d = distance(bs.position, at);
  return bs.power / bs.prb_count() * gain * std::pow(d, -path_loss_exponent);
}

double sinr(const UserTerminal& user, const BaseStation& serving,
            std::span<const BaseStation> stations, const AllocationMap& alloc,
            std::span<const PrbSet> occupied, const FadingField& fading,
            const ChannelModel& channel) {
  const int alpha = alloc.alpha(user.id);
  if (alpha < 1) throw std::invalid_argument("user holds no PRBs");
  const PrbSet& mine = alloc.prbs(user.id);

  const double signal = alpha * per_prb_power(serving, user.position,
                                              fading.gain(user.id, serving.id),
                                              channel.path_loss_exponent);
  double interference = 0.0;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const auto& bs = stations[i];
    if (bs.id == serving.id) continue;
    const int beta = prb_overlap(mine, occupied[i]);
    if (beta == 0) continue;
    interference += beta * per_prb_power(bs, user.position, fading.gain(user.id, bs.id),
                                         channel.path_loss_exponent);
  }
  return signal / (interference + channel.noise_power);
}

}  // namespace hetnet
