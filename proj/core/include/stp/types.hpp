#pragma once

#include <cstdint>

namespace stp {

// Coordinates and square labels are 64-bit throughout: reduction boards
// reach side lengths around 1e5, where labels (up to n^2 - 1) and cell
// indices (y * n + x) overflow 32 bits.
using Coord = std::int64_t;
using Label = std::int64_t;

}  // namespace stp
