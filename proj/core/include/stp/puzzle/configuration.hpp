#pragma once

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stp/puzzle/cell.hpp"
#include "stp/puzzle/moves.hpp"

namespace stp::puzzle {

// Set of cells visited by the hole over a simulation, start cell included.
class HoleRegion {
 public:
  explicit HoleRegion(Cell start) { cells_.insert(start); }

  void insert(Cell c) { cells_.insert(c); }
  bool contains(Cell c) const { return cells_.count(c) != 0; }
  std::size_t size() const { return cells_.size(); }
  const std::unordered_set<Cell, CellHash>& cells() const { return cells_; }

  // Row-major order.
  std::vector<Cell> sorted_cells() const;

  // Connected under the 4-neighborhood.
  bool is_connected() const;

 private:
  std::unordered_set<Cell, CellHash> cells_;
};

// Placement of n^2 - 1 labeled squares plus one hole on an n x n board.
//
// Stored sparsely: a canonical row-major base numbering, fixed by the hole
// cell the configuration was created with, plus overrides for exactly the
// cells whose square differs from that base. Boards from the reduction
// reach n ~ 1e4..1e5, so nothing here may cost O(n^2); a move costs O(1).
class Configuration {
 public:
  Configuration() = default;

  // Non-hole cells take labels 1, 2, ... in increasing index y*n + x.
  static Configuration canonical(Coord n, Cell hole);

  // Dense construction for small boards: grid[y*n + x] is the label at
  // (x, y) and 0 marks the hole. Labels must be a permutation of
  // 1..n^2-1.
  static Configuration from_dense(Coord n, const std::vector<Label>& grid);

  Coord side() const { return n_; }
  Cell hole() const { return hole_; }
  Cell base_hole() const { return base_hole_; }
  bool on_board(Cell c) const {
    return c.x >= 0 && c.x < n_ && c.y >= 0 && c.y < n_;
  }

  // Label of the square at c; nullopt for the hole cell.
  std::optional<Label> label_at(Cell c) const;

  // Label the canonical base numbering assigns to c; nullopt at the base
  // hole cell.
  std::optional<Label> base_label(Cell c) const;

  // Cells whose square differs from the base numbering. Never contains the
  // current hole cell, and never an entry equal to its base label.
  const std::unordered_map<Cell, Label, CellHash>& overrides() const {
    return overrides_;
  }

  bool can_apply(Move m) const { return on_board(step(hole_, m)); }

  // Slides the square adjacent in direction m into the hole. Throws
  // IllegalMoveError if the hole would leave the board.
  void apply(Move m);

  Configuration moved(Move m) const {
    Configuration next = *this;
    next.apply(m);
    return next;
  }

  // Same board with the given cells re-labeled. The new labels must be a
  // permutation of the labels currently on exactly those cells.
  Configuration permuted(const std::vector<std::pair<Cell, Label>>& placement) const;

  // Placement equality. Configurations with different base numberings fall
  // back to a full-board comparison, which is refused above side 1000.
  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  void set_label(Cell c, Label label);

  Coord n_ = 0;
  Cell base_hole_;
  Cell hole_;
  std::unordered_map<Cell, Label, CellHash> overrides_;
};

Configuration canonical_configuration(Coord n, Cell hole);
Configuration apply_move(const Configuration& cfg, Move m);

struct SequenceResult {
  Configuration config;
  HoleRegion region;
};

// Applies every move in turn and records the cells the hole visits. Runs in
// time proportional to the sequence length, independent of board area. The
// first illegal move is reported by index via IllegalMoveError.
SequenceResult apply_sequence(const Configuration& cfg, const MoveSequence& seq);

// Cells that do NOT hold the same square in a and b: different squares, or
// the hole in either. Row-major order.
std::vector<Cell> non_similar_cells(const Configuration& a, const Configuration& b);

}  // namespace stp::puzzle
