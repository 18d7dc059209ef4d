#include <vector>

#include "doctest.h"
#include "umtlab/error.hpp"
#include "umtlab/translator.hpp"

using namespace umtlab;

TEST_CASE("all injections enumerate in lexicographic tuple order") {
  const TranslatorFamily fam = TranslatorFamily::all_injections(2, 3);
  CHECK(fam.size() == 6);
  const std::vector<std::vector<TextId>> expected{
      {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (std::uint64_t i = 0; i < 6; ++i) {
    CHECK(fam.member(i).map == expected[i]);
    CHECK(fam.rank_of(expected[i]) == i);
  }
  std::vector<std::vector<TextId>> walked;
  fam.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    CHECK(index == walked.size());
    walked.emplace_back(map.begin(), map.end());
  });
  CHECK(walked == expected);
}

TEST_CASE("successor walk agrees with unranking at a bigger size") {
  const TranslatorFamily fam = TranslatorFamily::all_injections(3, 5);
  CHECK(fam.size() == 60);
  fam.for_each([&](std::uint64_t index, std::span<const TextId> map) {
    const Translator direct = fam.member(index);
    CHECK(std::equal(map.begin(), map.end(), direct.map.begin(),
                     direct.map.end()));
  });
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(TranslatorFamily::all_injections(4, 3), ParameterError);
  CHECK_THROWS_AS(injection_count(30, 40), BudgetError);
  CHECK(injection_count(9, 10) == 3628800);
  CHECK(injection_count(0, 5) == 1);
  std::vector<Translator> dup{Translator{{1, 1}}};
  CHECK_THROWS_AS(TranslatorFamily::explicit_family(2, 3, dup), ContractError);
  std::vector<Translator> oob{Translator{{0, 7}}};
  CHECK_THROWS_AS(TranslatorFamily::explicit_family(2, 3, oob), ContractError);
  TranslatorFamily fam = TranslatorFamily::all_injections(2, 3);
  CHECK_THROWS_AS(fam.set_star(6), ConfigError);
  fam.set_star(5);
  CHECK(*fam.star_index() == 5);
}
