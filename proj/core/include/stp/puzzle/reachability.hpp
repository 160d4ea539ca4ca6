#pragma once

#include "stp/puzzle/configuration.hpp"

namespace stp::puzzle {

// Whether t can be reached from s by legal moves: the parity of the
// permutation taking s's placement to t's (hole included) must equal the
// parity of the Manhattan distance between the two hole cells. Sparse;
// costs O(overrides), not O(n^2).
bool is_reachable(const Configuration& s, const Configuration& t);

}  // namespace stp::puzzle
