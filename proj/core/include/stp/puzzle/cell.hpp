#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "stp/types.hpp"

namespace stp::puzzle {

// Board cell. x grows rightward, y grows upward, both 0-based.
struct Cell {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;

  // Row-major board order: matches the index y*n + x on any board holding
  // both cells.
  friend constexpr std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != std::strong_ordering::equal) return c;
    return a.x <=> b.x;
  }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t z = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
    z ^= static_cast<std::uint64_t>(c.y) + 0x9e3779b97f4a7c15ULL + (z << 6) + (z >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

}  // namespace stp::puzzle
