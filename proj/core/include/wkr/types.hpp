#pragma once

#include <cstdint>
#include <limits>

namespace wkr {

using VertexId = std::uint32_t;
using Weight = std::uint32_t;
using HopCount = std::uint32_t;
using Rank = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr Rank kNoRank = std::numeric_limits<Rank>::max();

// Largest weight a graph may carry; the value above it encodes the empty interval.
inline constexpr Weight kMaxWeight = std::numeric_limits<Weight>::max() - 1;

}  // namespace wkr
