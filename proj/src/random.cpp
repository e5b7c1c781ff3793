#include "hetnet/random.hpp"

namespace hetnet {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

std::uint64_t drop_seed(std::uint64_t base_seed, std::uint64_t drop_index) noexcept {
  return combine_seed(base_seed, drop_index);
}

RandomStream make_stream(std::uint64_t drop_seed, Layer layer) {
  const std::uint64_t s = combine_seed(drop_seed, static_cast<std::uint64_t>(layer));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return RandomStream(seq);
}

double counter_uniform(std::uint64_t key, std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t h = mix64(combine_seed(combine_seed(key, a), b));
  // 53 random bits, shifted off zero.
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace hetnet
