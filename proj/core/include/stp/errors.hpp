#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stp {

// Malformed text input. line is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A move that would push the hole off the board. index is the 0-based
// position of the offending move within the sequence being applied.
class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(const std::string& msg, std::size_t index)
      : std::runtime_error(msg + " (move index " + std::to_string(index) + ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Input outside the supported desk-scale envelope (BFS oracle, exact solver).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stp
