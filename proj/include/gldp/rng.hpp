#pragma once

#include <cstdint>

// Counter-based randomness helpers. Everything downstream (generators,
// obfuscation, experiment sweeps) derives its streams from a single master
// seed through these mixers, so results are independent of iteration order
// and thread count.
namespace gldp::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ (kGolden + tag + (seed << 6) + (seed >> 2)));
}

template <typename... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t seed, Tags... tags) {
  ((seed = derive(seed, static_cast<std::uint64_t>(tags))), ...);
  return seed;
}

// One draw for (stream, counter); the stream at fixed `stream` is the
// splitmix64 sequence.
inline constexpr std::uint64_t counter_draw(std::uint64_t stream,
                                            std::uint64_t counter) {
  return mix64(stream + (counter + 1) * kGolden);
}

// Uniform double in [0, 1) from the high 53 bits.
inline constexpr double to_unit(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection; `next` is any callable
// returning uint64_t.
template <typename Rng>
std::uint64_t bounded(Rng&& next, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r = next();
  while (r < threshold) r = next();
  return r % bound;
}

}  // namespace gldp::rng
