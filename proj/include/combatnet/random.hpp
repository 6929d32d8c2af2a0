#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace combatnet {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for a stream identified by a counter path, e.g.
// derive_seed(master, {stream_tag, replicate, attempt}). Each component is
// folded in with one splitmix64 round, so distinct paths give unrelated
// streams and no generator state is shared between replicates.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(master);
  for (auto c : path) h = splitmix64(h ^ splitmix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

// Stream tags used by the experiment harness.
namespace stream {
inline constexpr std::uint64_t kNetwork = 1;
inline constexpr std::uint64_t kOptimizer = 2;
inline constexpr std::uint64_t kTiming = 3;
}  // namespace stream

}  // namespace combatnet
