#include "umtlab/models/rt.hpp"

#include <algorithm>
#include <string>

#include "umtlab/error.hpp"
#include "umtlab/rng.hpp"

namespace umtlab {

std::uint64_t TreeLanguageInstance::text_space() const {
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < depth; ++i) space *= vocab_size;
  return space;
}

std::uint64_t TreeLanguageInstance::word_at(TextId text,
                                            std::uint64_t pos) const {
  std::uint64_t shift = depth - 1 - pos;
  for (std::uint64_t i = 0; i < shift; ++i) text /= vocab_size;
  return text % vocab_size;
}

RtOutput gen_rt(std::uint64_t seed, std::uint64_t vocab_size,
                std::uint64_t depth, std::uint64_t a, std::uint64_t b,
                std::uint64_t budget) {
  if (a == 0 || a > b || 4 * b > vocab_size) {
    throw ParameterError("gen_rt: need 1 <= a <= b <= vocab/4");
  }
  if (depth == 0) throw ParameterError("gen_rt: depth must be positive");

  std::uint64_t p_count = 1;
  std::uint64_t space = 1;
  for (std::uint64_t level = 0; level < depth; ++level) {
    if (p_count > budget / b) {
      throw BudgetError("gen_rt: b^depth exceeds the text budget " +
                        std::to_string(budget));
    }
    p_count *= b;
    if (space > (std::uint64_t{1} << 62) / vocab_size) {
      throw ParameterError("gen_rt: vocab^depth overflows the text space");
    }
    space *= vocab_size;
  }

  TreeLanguageInstance inst;
  inst.vocab_size = vocab_size;
  inst.depth = depth;
  inst.a = a;
  inst.b = b;

  Rng labels = Rng::stream(seed, "rt.labels");
  Rng picks = Rng::stream(seed, "rt.subtree");

  // Frontier of (prefix id, in-subtree) pairs, expanded level by level in
  // breadth order.
  struct Node {
    TextId prefix;
    bool in_h;
  };
  std::vector<Node> frontier{{0, true}};
  for (std::uint64_t level = 0; level < depth; ++level) {
    std::vector<Node> next;
    next.reserve(frontier.size() * b);
    for (const Node& node : frontier) {
      const std::vector<std::uint64_t> words =
          labels.sample_distinct(b, vocab_size);
      std::vector<char> kept(b, 0);
      if (node.in_h) {
        for (std::uint64_t c : picks.sample_distinct(a, b)) kept[c] = 1;
      }
      for (std::uint64_t c = 0; c < b; ++c) {
        next.push_back(
            Node{node.prefix * vocab_size + words[c], node.in_h && kept[c]});
      }
    }
    frontier = std::move(next);
  }

  for (const Node& node : frontier) {
    inst.p_texts.push_back(node.prefix);
    if (node.in_h) inst.t_texts.push_back(node.prefix);
  }
  std::sort(inst.p_texts.begin(), inst.p_texts.end());
  std::sort(inst.t_texts.begin(), inst.t_texts.end());

  FiniteDistribution mu = FiniteDistribution::uniform_over(space, inst.t_texts);
  FiniteDistribution rho =
      FiniteDistribution::uniform_over(space, inst.p_texts);
  return RtOutput{std::move(inst), std::move(mu), std::move(rho)};
}

}  // namespace umtlab
