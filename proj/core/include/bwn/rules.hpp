// Copyright 2026 The Blocking Wythoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Move geometry of Wythoff Nim, blocking specifications and terminal sets.

#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwn {

using Coord = int64_t;

// A cell of the ordered board N0 x N0.
struct Position {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;

  constexpr Position mirror() const { return {y, x}; }
  // Unordered presentation {x, y} with x <= y.
  constexpr Position normalized() const { return x <= y ? *this : mirror(); }
};

std::ostream& operator<<(std::ostream& out, const Position& p);

enum class MoveClass : uint8_t { kVertical, kHorizontal, kDiagonal };

std::string_view to_string(MoveClass c);

// Vertical removes from y, horizontal from x, diagonal from both.
struct Move {
  Position to;
  MoveClass cls;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

// Which move classes the blocking (or comply) maneuver constrains.
enum class Mode : uint8_t { kAll = 0, kDiagOnly = 1, kNimOnly = 2 };
enum class Flavor : uint8_t { kBlocking = 0, kComply = 1 };

std::string_view to_string(Mode m);
std::string_view to_string(Flavor f);
Mode parse_mode(std::string_view s);
Flavor parse_flavor(std::string_view s);

struct BlockingSpec {
  Mode mode = Mode::kAll;
  Flavor flavor = Flavor::kBlocking;
  uint32_t k = 1;

  friend constexpr bool operator==(const BlockingSpec&, const BlockingSpec&) = default;

  // Throws std::invalid_argument unless k >= 1.
  void validate() const;
};

std::ostream& operator<<(std::ostream& out, const BlockingSpec& spec);

constexpr bool is_nim_class(MoveClass c) { return c != MoveClass::kDiagonal; }

// True when the maneuver of `mode` constrains moves of class `c`.
constexpr bool is_blockable(Mode mode, MoveClass c) {
  switch (mode) {
    case Mode::kAll:
      return true;
    case Mode::kDiagOnly:
      return c == MoveClass::kDiagonal;
    case Mode::kNimOnly:
      return c != MoveClass::kDiagonal;
  }
  return false;
}

// All Wythoff Nim options of p ordered by class (v, h, d) and, within a
// class, by decreasing removal size.
std::vector<Move> options(Position p);

// |options(p)| without materializing the list.
constexpr Coord option_count(Position p) {
  return p.x + p.y + (p.x < p.y ? p.x : p.y);
}

// True iff `to` is reachable from `from` by one Wythoff Nim move.
bool is_option(Position from, Position to);
// Throws std::invalid_argument if `to` is not an option of `from`.
MoveClass classify_move(Position from, Position to);

// Positions whose every option can be blocked, i.e. with fewer than k options.
struct TerminalSet {
  uint32_t k = 1;
  std::set<Position> cells;  // symmetric closure

  bool contains(Position p) const { return cells.contains(p); }
};

// Membership predicate for the terminal set: min <= max < k - 2 min.
bool is_terminal(uint32_t k, Position p);

TerminalSet terminal_set(uint32_t k);

// Closed-form count of ordered terminal cells.
uint64_t terminal_count(uint32_t k);

}  // namespace bwn
