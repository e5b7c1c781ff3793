#ifndef HETNET_NETWORK_HPP
#define HETNET_NETWORK_HPP

#include <string_view>

#include "hetnet/geometry.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

enum class Tier { Macro, Femto };

std::string_view to_string(Tier tier) noexcept;

/// Base station ids are dense indices: macros first, then femtos.
struct BaseStation {
  int id = 0;
  Tier tier = Tier::Macro;
  Point position;
  double power = 0.0;  // W, over the whole fragment
  Fragment fragment;

  bool is_macro() const noexcept { return tier == Tier::Macro; }
  bool is_femto() const noexcept { return tier == Tier::Femto; }
  /// N_PRB of this station: the PRB count its power is spread over.
  int prb_count() const noexcept { return fragment.len; }
};

/// User ids are dense indices into the drop's user list.
struct UserTerminal {
  int id = 0;
  Point position;
};

inline double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

}  // namespace hetnet

#endif  // HETNET_NETWORK_HPP
