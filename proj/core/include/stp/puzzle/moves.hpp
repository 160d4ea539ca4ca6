#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stp/puzzle/cell.hpp"

namespace stp::puzzle {

// Direction the hole travels; the adjacent square slides the opposite way.
enum class Move : std::uint8_t { Up, Right, Down, Left };

constexpr Cell step(Cell c, Move m) {
  switch (m) {
    case Move::Up:    return {c.x, c.y + 1};
    case Move::Right: return {c.x + 1, c.y};
    case Move::Down:  return {c.x, c.y - 1};
    case Move::Left:  return {c.x - 1, c.y};
  }
  return c;
}

constexpr Move inverse(Move m) {
  switch (m) {
    case Move::Up:    return Move::Down;
    case Move::Right: return Move::Left;
    case Move::Down:  return Move::Up;
    case Move::Left:  return Move::Right;
  }
  return m;
}

constexpr char to_char(Move m) {
  switch (m) {
    case Move::Up:    return 'U';
    case Move::Right: return 'R';
    case Move::Down:  return 'D';
    case Move::Left:  return 'L';
  }
  return '?';
}

constexpr std::optional<Move> move_from_char(char ch) {
  switch (ch) {
    case 'U': return Move::Up;
    case 'R': return Move::Right;
    case 'D': return Move::Down;
    case 'L': return Move::Left;
    default:  return std::nullopt;
  }
}

// Unit move between adjacent cells; nullopt when the cells are not adjacent.
std::optional<Move> move_between(Cell from, Cell to);

class MoveSequence {
 public:
  MoveSequence() = default;
  explicit MoveSequence(std::vector<Move> moves) : moves_(std::move(moves)) {}

  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  Move operator[](std::size_t i) const { return moves_[i]; }
  const std::vector<Move>& moves() const { return moves_; }

  auto begin() const { return moves_.begin(); }
  auto end() const { return moves_.end(); }

  void push_back(Move m) { moves_.push_back(m); }
  void append(const MoveSequence& other) {
    moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
  }
  // Inserts other before position pos (0-based move index).
  void insert(std::size_t pos, const MoveSequence& other) {
    moves_.insert(moves_.begin() + static_cast<std::ptrdiff_t>(pos),
                  other.moves_.begin(), other.moves_.end());
  }

  // The sequence that undoes this one.
  MoveSequence reversed() const;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;

 private:
  std::vector<Move> moves_;
};

// Text form: characters over U/D/L/R, wrapped at 80 columns. U means the
// hole moves to y+1.
std::string format_moves(const MoveSequence& seq);

// Accepts arbitrary line wrapping; whitespace is ignored. Throws ParseError
// on any other character.
MoveSequence parse_moves(std::string_view text);

}  // namespace stp::puzzle
