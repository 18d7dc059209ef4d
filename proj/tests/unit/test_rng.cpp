#include <algorithm>
#include <map>

#include "doctest.h"
#include "umtlab/rng.hpp"

using namespace umtlab;

TEST_CASE("streams are deterministic and tag-separated") {
  Rng a = Rng::stream(42, "alpha");
  Rng b = Rng::stream(42, "alpha");
  Rng c = Rng::stream(42, "beta");
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t va = a.next();
    all_equal = all_equal && va == b.next();
    any_diff = any_diff || va != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("indexed streams differ") {
  Rng a = Rng::stream(7, "member", 0);
  Rng b = Rng::stream(7, "member", 1);
  CHECK(a.next() != b.next());
}

TEST_CASE("below stays in range and covers it") {
  Rng rng(123);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 3000; ++i) ++seen[rng.below(7)];
  CHECK(seen.size() == 7);
  for (const auto& [v, count] : seen) {
    CHECK(v < 7);
    // Uniform share is ~429; allow generous slack.
    CHECK(count > 300);
    CHECK(count < 560);
  }
  CHECK_THROWS_AS(rng.below(0), ParameterError);
}

TEST_CASE("unit is in [0,1)") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sample_distinct draws a valid ordered sample") {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    auto sample = rng.sample_distinct(6, 20);
    CHECK(sample.size() == 6);
    auto sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (auto v : sample) CHECK(v < 20);
  }
  // Full shuffle case.
  auto perm = rng.sample_distinct(10, 10);
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t i = 0; i < 10; ++i) CHECK(sorted[i] == i);
  CHECK_THROWS_AS(rng.sample_distinct(5, 4), ParameterError);
}

TEST_CASE("sample_distinct first entry is uniform") {
  // The first coordinate of an ordered sample from [n] must be uniform.
  Rng rng(77);
  std::map<std::uint64_t, int> first;
  const int rounds = 8000;
  for (int i = 0; i < rounds; ++i) ++first[rng.sample_distinct(3, 8)[0]];
  for (const auto& [v, count] : first) {
    CHECK(count > rounds / 8 - 300);
    CHECK(count < rounds / 8 + 300);
  }
}
