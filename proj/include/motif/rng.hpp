#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace motif {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of two 64-bit values. Used to derive
// per-restart seeds from (base seed, restart index) so that parallel and
// sequential restart execution see identical random streams.
inline std::uint64_t stable_hash(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x9E3779B97F4A7C15ULL));
}

// K distinct values from [0, n), uniform, via Floyd's sampling.
// Requires k <= n.
inline std::vector<std::size_t> sample_distinct(std::mt19937_64& rng, std::size_t n,
                                                std::size_t k) {
  std::unordered_set<std::size_t> seen;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t t = n - k; t < n; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng() % (t + 1));
    if (seen.insert(r).second) {
      out.push_back(r);
    } else {
      seen.insert(t);
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace motif
