#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "umtlab/error.hpp"
#include "umtlab/models/cn.hpp"

using namespace umtlab;

TEST_CASE("alpha zero removes nothing") {
  const CnOutput cn = gen_cn(4, 20, 50, 0.0, 8);
  CHECK(std::count(cn.instance.sensical.begin(), cn.instance.sensical.end(), 1) ==
        50);
  for (TextId y = 0; y < 50; ++y) {
    CHECK(cn.rho.mass(y) == doctest::Approx(0.02).epsilon(1e-12));
  }
  CHECK(cn.instance.mu_support.size() == 20);
}

TEST_CASE("surviving translated mass concentrates at (1-alpha)|T|") {
  const double alpha = 0.3;
  const std::uint64_t t_size = 200;
  std::uint64_t surviving = 0;
  const std::uint64_t seeds = 1000;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    const CnOutput cn = gen_cn(seed, t_size, 500, alpha, 4);
    surviving += cn.instance.mu_support.size();
  }
  const double total = static_cast<double>(seeds * t_size);
  const double rate = static_cast<double>(surviving) / total;
  const double sigma = std::sqrt(alpha * (1 - alpha) / total);
  CHECK(std::abs(rate - (1 - alpha)) <= 3 * sigma);
}

TEST_CASE("translated support is contained in the prior support") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CnOutput cn = gen_cn(seed, 30, 80, 0.4, 6);
    const Translator star =
        cn.instance.family.member(*cn.instance.family.star_index());
    for (TextId x : cn.instance.mu_support) {
      CHECK(cn.rho.mass(star(x)) > 0.0);
    }
    CHECK(cn.mu.support() == cn.instance.mu_support);
  }
}

TEST_CASE("the hidden index is a member and generation is deterministic") {
  const CnOutput a = gen_cn(7, 25, 60, 0.25, 10);
  const CnOutput b = gen_cn(7, 25, 60, 0.25, 10);
  CHECK(*a.instance.family.star_index() == *b.instance.family.star_index());
  CHECK(a.instance.sensical == b.instance.sensical);
  for (std::uint64_t k = 0; k < 10; ++k) {
    CHECK(a.instance.family.member(k).map == b.instance.family.member(k).map);
  }
}

TEST_CASE("alpha above one half generates with a warning") {
  const CnOutput cn = gen_cn(3, 10, 40, 0.7, 4);
  CHECK(!cn.instance.warnings.empty());
  CHECK(cn.instance.alpha == 0.7);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gen_cn(1, 50, 20, 0.2, 4), ParameterError);
  CHECK_THROWS_AS(gen_cn(1, 0, 20, 0.2, 4), ParameterError);
  CHECK_THROWS_AS(gen_cn(1, 10, 20, -0.1, 4), ParameterError);
  CHECK_THROWS_AS(gen_cn(1, 10, 20, 0.2, 0), ParameterError);
}

TEST_CASE("a removal that wipes the language collapses to a singleton") {
  // alpha = 1 removes everything; the degenerate fallback keeps exactly the
  // ground-truth image of text 0.
  const CnOutput cn = gen_cn(5, 6, 12, 1.0, 3);
  CHECK(cn.instance.degenerate);
  CHECK(cn.instance.mu_support == std::vector<TextId>{0});
  const Translator star =
      cn.instance.family.member(*cn.instance.family.star_index());
  CHECK(cn.rho.mass(star(0)) == 1.0);
  CHECK(cn.mu.mass(0) == 1.0);
}
