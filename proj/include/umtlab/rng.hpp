#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "umtlab/error.hpp"

namespace umtlab {

// 64-bit finalizer (splitmix64). Used both as the generator step and as the
// mixing function that derives per-structure streams from a master seed.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a over a tag string; stable across platforms.
constexpr std::uint64_t tag64(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic stream of 64-bit values. All randomness in the project flows
// through this type so that a (seed, parameters) pair fully determines every
// generated structure, independent of platform and thread schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Sub-stream for one named structure of one seeded object.
  static Rng stream(std::uint64_t seed, std::string_view tag,
                    std::uint64_t index = 0) {
    return Rng(mix64(seed ^ mix64(tag64(tag) + 0x632be59bd9b4e019ULL * index)));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw ParameterError("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::uint64_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

  // First k entries of a uniform permutation of [0, n): an ordered sample
  // without replacement, i.e. a uniform injection [k] -> [n]. Partial
  // Fisher-Yates with a sparse displacement map, O(k) memory.
  std::vector<std::uint64_t> sample_distinct(std::uint64_t k, std::uint64_t n) {
    if (k > n) throw ParameterError("Rng::sample_distinct: k > n");
    std::vector<std::uint64_t> out(k);
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    moved.reserve(2 * k);
    for (std::uint64_t i = 0; i < k; ++i) {
      const std::uint64_t j = i + below(n - i);
      const auto jt = moved.find(j);
      const std::uint64_t vj = (jt == moved.end()) ? j : jt->second;
      const auto it = moved.find(i);
      const std::uint64_t vi = (it == moved.end()) ? i : it->second;
      out[i] = vj;
      moved[j] = vi;
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace umtlab
