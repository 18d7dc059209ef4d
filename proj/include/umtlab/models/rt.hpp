#pragma once

#include <cstdint>
#include <vector>

#include "umtlab/distribution.hpp"
#include "umtlab/types.hpp"

namespace umtlab {

inline constexpr std::uint64_t kDefaultRtBudget = std::uint64_t{1} << 22;

// Texts are depth-long word sequences read off root-to-leaf paths of a full
// b-ary tree whose sibling edge labels are drawn without replacement from a
// vocabulary; the translated texts are the paths of a hidden a-ary subtree.
// A text (w_1 .. w_n) is encoded as the base-|W| integer with w_1 most
// significant, so the text space has size |W|^depth.
struct TreeLanguageInstance {
  std::uint64_t vocab_size = 0;
  std::uint64_t depth = 0;
  std::uint64_t a = 0;  // subtree arity
  std::uint64_t b = 0;  // full tree arity

  std::vector<TextId> p_texts;  // sorted, size b^depth
  std::vector<TextId> t_texts;  // sorted, size a^depth, subset of p_texts

  std::uint64_t text_space() const;

  // Word at position `pos` (0 = first) of an encoded text.
  std::uint64_t word_at(TextId text, std::uint64_t pos) const;
  // First depth-1 words; the prefix key used by the four-way partition.
  std::uint64_t prefix_of(TextId text) const { return text / vocab_size; }
};

struct RtOutput {
  TreeLanguageInstance instance;
  FiniteDistribution mu;   // uniform over t_texts (identity ground truth)
  FiniteDistribution rho;  // uniform over p_texts
};

// Builds the labeled tree level by level: each node draws b distinct words
// for its child edges, and nodes of the hidden subtree keep a uniformly
// chosen a of their b children. Requires 1 <= a <= b <= vocab_size/4;
// b^depth above `budget` texts is refused.
RtOutput gen_rt(std::uint64_t seed, std::uint64_t vocab_size,
                std::uint64_t depth, std::uint64_t a, std::uint64_t b,
                std::uint64_t budget = kDefaultRtBudget);

}  // namespace umtlab
