#pragma once

#include <cstdint>

namespace umtlab {

// Texts are opaque dense integer IDs: 0 <= id < space size.
using TextId = std::uint64_t;

// Node of a knowledge graph; edge texts are encoded as u * node_count + v.
using NodeId = std::uint32_t;

inline constexpr double kMassTolerance = 1e-9;

}  // namespace umtlab
