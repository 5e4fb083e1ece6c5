#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace jchroma {

// Stateless mixer used to derive independent streams from one root seed, so
// parallel samplers produce the same draws regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 1)));
}

// Bounded draw implemented directly (std::uniform_int_distribution is not
// reproducible across standard libraries).  The modulo bias is irrelevant
// for sampling purposes here.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

template <class T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace jchroma
