#pragma once

#include <cstdint>
#include <limits>

namespace dynres {

// Dense vertex index in [0, n). The vertex set is fixed at graph construction.
using VertexId = std::uint32_t;

// Monotonically assigned at insertion; a deleted id is never revived.
using EdgeId = std::uint32_t;

using WalkId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr std::uint64_t kNoHandle = 0;

}  // namespace dynres
