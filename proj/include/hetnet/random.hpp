#ifndef HETNET_RANDOM_HPP
#define HETNET_RANDOM_HPP

#include <cstdint>
#include <random>

namespace hetnet {

/// Per-worker pseudo-random source. Never shared between threads.
using RandomStream = std::mt19937_64;

/// Independent substreams used inside one drop.
enum class Layer : std::uint64_t {
  Femto = 1,
  User = 2,
  Fragment = 3,
  Subscriber = 4,
  Allocation = 5,
  Fading = 6,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive combination of two 64-bit values into a well-mixed seed.
std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// Seed of drop `drop_index` derived from the run's base seed.
std::uint64_t drop_seed(std::uint64_t base_seed, std::uint64_t drop_index) noexcept;

/// Substream for one layer of one drop.
RandomStream make_stream(std::uint64_t drop_seed, Layer layer);

/// Counter-based uniform in the open interval (0, 1), a pure function of its
/// arguments. Lets per-pair variates be drawn in any order.
double counter_uniform(std::uint64_t key, std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace hetnet

#endif  // HETNET_RANDOM_HPP
