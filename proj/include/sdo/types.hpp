#pragma once

#include <cstdint>

namespace sdo {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

}  // namespace sdo
