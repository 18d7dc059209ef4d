#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "umtlab/error.hpp"
#include "umtlab/models/rt.hpp"

using namespace umtlab;

namespace {

// Sibling labels under every prefix must be distinct: group texts by their
// first `level` words and look at the next word.
void check_sibling_distinctness(const TreeLanguageInstance& inst) {
  for (std::uint64_t level = 0; level < inst.depth; ++level) {
    std::map<std::uint64_t, std::set<std::uint64_t>> children;
    std::map<std::uint64_t, std::uint64_t> multiplicity;
    for (TextId text : inst.p_texts) {
      std::uint64_t prefix = 0;
      for (std::uint64_t pos = 0; pos < level; ++pos) {
        prefix = prefix * inst.vocab_size + inst.word_at(text, pos);
      }
      children[prefix].insert(inst.word_at(text, level));
      ++multiplicity[prefix];
    }
    for (const auto& [prefix, labels] : children) {
      // multiplicity / b^(remaining levels) distinct paths under each label
      const std::uint64_t expected = labels.size();
      std::uint64_t per_label = multiplicity[prefix] / expected;
      CHECK(expected * per_label == multiplicity[prefix]);
      CHECK(expected == inst.b);
    }
  }
}

}  // namespace

TEST_CASE("plausible and translated counts are exact powers") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RtOutput rt = gen_rt(seed, 12, 4, 2, 3);
    CHECK(rt.instance.p_texts.size() == 81);  // 3^4
    CHECK(rt.instance.t_texts.size() == 16);  // 2^4
    CHECK(std::includes(rt.instance.p_texts.begin(), rt.instance.p_texts.end(),
                        rt.instance.t_texts.begin(),
                        rt.instance.t_texts.end()));
  }
}

TEST_CASE("equal arities make the subtree the whole tree") {
  const RtOutput rt = gen_rt(9, 8, 3, 2, 2);
  CHECK(rt.instance.p_texts == rt.instance.t_texts);
}

TEST_CASE("sibling labels are distinct at every node") {
  const RtOutput rt = gen_rt(5, 8, 3, 2, 2);
  check_sibling_distinctness(rt.instance);
  const RtOutput wide = gen_rt(17, 16, 3, 2, 4);
  check_sibling_distinctness(wide.instance);
}

TEST_CASE("languages are uniform over their text sets") {
  const RtOutput rt = gen_rt(3, 12, 3, 2, 3);
  const double p_mass = 1.0 / 27.0;
  for (TextId t : rt.instance.p_texts) {
    CHECK(rt.rho.mass(t) == doctest::Approx(p_mass).epsilon(1e-12));
  }
  const double t_mass = 1.0 / 8.0;
  for (TextId t : rt.instance.t_texts) {
    CHECK(rt.mu.mass(t) == doctest::Approx(t_mass).epsilon(1e-12));
  }
}

TEST_CASE("generation is deterministic") {
  const RtOutput a = gen_rt(21, 12, 4, 2, 3);
  const RtOutput b = gen_rt(21, 12, 4, 2, 3);
  CHECK(a.instance.p_texts == b.instance.p_texts);
  CHECK(a.instance.t_texts == b.instance.t_texts);
}

TEST_CASE("parameter and budget validation") {
  CHECK_THROWS_AS(gen_rt(1, 8, 3, 3, 2), ParameterError);   // a > b
  CHECK_THROWS_AS(gen_rt(1, 8, 3, 0, 2), ParameterError);   // a = 0
  CHECK_THROWS_AS(gen_rt(1, 8, 3, 2, 3), ParameterError);   // b > vocab/4
  CHECK_THROWS_AS(gen_rt(1, 8, 0, 2, 2), ParameterError);   // depth 0
  CHECK_THROWS_AS(gen_rt(1, 16, 10, 2, 4, /*budget=*/1000), BudgetError);
}
