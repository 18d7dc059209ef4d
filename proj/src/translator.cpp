#include "umtlab/translator.hpp"

#include <algorithm>
#include <string>

#include "umtlab/error.hpp"

namespace umtlab {

void validate_injective(std::span<const TextId> map,
                        std::uint64_t target_size) {
  std::vector<char> seen(target_size, 0);
  for (TextId y : map) {
    if (y >= target_size) {
      throw ContractError("translator maps to id " + std::to_string(y) +
                          " outside target space of size " +
                          std::to_string(target_size));
    }
    if (seen[y]) {
      throw ContractError("translator is not injective: target id " +
                          std::to_string(y) + " repeated");
    }
    seen[y] = 1;
  }
}

std::uint64_t injection_count(std::uint64_t source_size,
                              std::uint64_t target_size) {
  if (source_size > target_size) {
    throw ParameterError("injection_count: source larger than target");
  }
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < source_size; ++i) {
    const std::uint64_t factor = target_size - i;
    if (count > (std::uint64_t{1} << 62) / factor) {
      throw BudgetError("injection_count: family size overflows 64 bits");
    }
    count *= factor;
  }
  return count;
}

TranslatorFamily TranslatorFamily::explicit_family(
    std::uint64_t source_size, std::uint64_t target_size,
    std::vector<Translator> members) {
  if (members.empty()) {
    throw ConfigError("TranslatorFamily: empty member list");
  }
  for (const Translator& t : members) {
    if (t.map.size() != source_size) {
      throw DimensionError("TranslatorFamily: member domain size mismatch");
    }
    validate_injective(t.map, target_size);
  }
  TranslatorFamily fam;
  fam.source_size_ = source_size;
  fam.target_size_ = target_size;
  fam.members_ = std::move(members);
  return fam;
}

TranslatorFamily TranslatorFamily::all_injections(std::uint64_t source_size,
                                                  std::uint64_t target_size) {
  if (source_size == 0 || source_size > target_size) {
    throw ParameterError("TranslatorFamily: need 0 < source <= target");
  }
  injection_count(source_size, target_size);  // overflow guard
  TranslatorFamily fam;
  fam.source_size_ = source_size;
  fam.target_size_ = target_size;
  fam.implicit_ = true;
  return fam;
}

std::uint64_t TranslatorFamily::size() const {
  if (implicit_) return injection_count(source_size_, target_size_);
  return members_.size();
}

Translator TranslatorFamily::member(std::uint64_t index) const {
  if (index >= size()) {
    throw ParameterError("TranslatorFamily: index " + std::to_string(index) +
                         " out of range");
  }
  if (!implicit_) return members_[index];

  // Unrank within the lexicographic order of injection tuples. After fixing
  // a prefix, the remaining slots admit injection_count(r-i-1, n-i-1)
  // completions regardless of which values the prefix consumed.
  std::vector<TextId> tuple(source_size_);
  std::vector<char> used(target_size_, 0);
  std::uint64_t rank = index;
  for (std::uint64_t i = 0; i < source_size_; ++i) {
    const std::uint64_t block =
        injection_count(source_size_ - i - 1, target_size_ - i - 1);
    std::uint64_t skip = rank / block;
    rank %= block;
    for (TextId v = 0; v < target_size_; ++v) {
      if (used[v]) continue;
      if (skip == 0) {
        tuple[i] = v;
        used[v] = 1;
        break;
      }
      --skip;
    }
  }
  return Translator{std::move(tuple)};
}

std::uint64_t TranslatorFamily::rank_of(std::span<const TextId> map) const {
  if (map.size() != source_size_) {
    throw DimensionError("TranslatorFamily: rank_of domain size mismatch");
  }
  if (!implicit_) {
    for (std::uint64_t i = 0; i < members_.size(); ++i) {
      if (std::equal(map.begin(), map.end(), members_[i].map.begin(),
                     members_[i].map.end())) {
        return i;
      }
    }
    throw ParameterError("TranslatorFamily: map is not a member");
  }
  validate_injective(map, target_size_);
  std::vector<char> used(target_size_, 0);
  std::uint64_t rank = 0;
  for (std::uint64_t i = 0; i < source_size_; ++i) {
    const std::uint64_t block =
        injection_count(source_size_ - i - 1, target_size_ - i - 1);
    std::uint64_t smaller = 0;
    for (TextId v = 0; v < map[i]; ++v) {
      if (!used[v]) ++smaller;
    }
    rank += smaller * block;
    used[map[i]] = 1;
  }
  return rank;
}

void TranslatorFamily::set_star(std::uint64_t index) {
  if (index >= size()) {
    throw ConfigError("TranslatorFamily: star index out of range");
  }
  star_ = index;
}

void TranslatorFamily::next_injection(std::vector<TextId>& tuple,
                                      std::vector<char>& used) {
  const std::uint64_t r = tuple.size();
  const std::uint64_t n = used.size();
  std::uint64_t i = r;
  while (i > 0) {
    --i;
    used[tuple[i]] = 0;
    TextId v = tuple[i] + 1;
    while (v < n && used[v]) ++v;
    if (v < n) {
      tuple[i] = v;
      used[v] = 1;
      // Smallest unused values fill the suffix in ascending order.
      TextId w = 0;
      for (std::uint64_t j = i + 1; j < r; ++j) {
        while (used[w]) ++w;
        tuple[j] = w;
        used[w] = 1;
      }
      return;
    }
  }
  throw ParameterError("TranslatorFamily: successor past last member");
}

}  // namespace umtlab
