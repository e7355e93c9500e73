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

// Live Blocking Wythoff Nim sessions against an engine that reads a solved
// grid.
//
// Turn structure: the previous player (the blocker) declares up to k-1
// blockable options forbidden, then the next player moves among the rest.
// After the move the blocks are forgotten and the roles swap, so the side
// that just moved blocks next. A mover left without any option loses; in
// particular moving to (0,0) wins.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwn/grid.hpp"
#include "bwn/rules.hpp"

namespace bwn {

// Rejected game action. `code` is a stable machine-readable identifier.
class GameError : public std::runtime_error {
 public:
  GameError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class Role : uint8_t { kHuman, kEngine };
enum class Seat : uint8_t { kNext, kPrevious };
enum class Phase : uint8_t { kAwaitBlock, kAwaitMove };
enum class Status : uint8_t { kOngoing, kHumanWon, kEngineWon };

constexpr Role other(Role r) { return r == Role::kHuman ? Role::kEngine : Role::kHuman; }

std::string_view to_string(Role r);
std::string_view to_string(Seat s);
std::string_view to_string(Phase p);
std::string_view to_string(Status s);
Seat parse_seat(std::string_view s);

struct TurnRecord {
  Role mover;
  std::vector<Position> blocks;
  std::optional<Position> move;  // empty when the mover had no legal move
};

struct GameState {
  std::string id;
  BlockingSpec spec;
  uint32_t n = 0;
  Position position;
  Phase phase = Phase::kAwaitBlock;
  Role blocker = Role::kEngine;  // the previous player
  std::vector<Position> blocked;
  Status status = Status::kOngoing;
  std::vector<TurnRecord> history;

  Role mover() const { return other(blocker); }
  bool over() const { return status != Status::kOngoing; }

  // Unblocked options of the current position.
  std::vector<Position> legal_moves() const;
  // Options the blocker may forbid under spec.mode.
  std::vector<Position> blockable_options() const;
  uint32_t block_budget() const { return spec.k - 1; }
};

// Validates the spec and start, then lets the engine act if it holds the
// first action. Throws GameError("invalid_start" | "unsupported_spec" |
// "grid_mismatch").
GameState new_game(const BlockingSpec& spec, uint32_t n, Position start, Seat human_seat,
                   const PGrid& grid, std::string id = {});

// Raw state transitions; `actor` must hold the right to act. Neither lets
// the engine reply.
void apply_block(GameState& state, std::vector<Position> cells, Role actor);
void apply_move(GameState& state, Position to, Role actor);

struct EngineAction {
  std::vector<Position> blocks;
  std::optional<Position> move;
};

// The engine's decision for the pending action:
//   blocking at a P position: forbid exactly the P options (fewer than k);
//   moving at an N position: the lex-smallest unblocked P option;
//   in a lost position: forbid the first k-1 blockable P options, or move to
//   the lex-smallest legal option.
// Throws GameError("grid_mismatch") if the grid does not fit the session and
// GameError("not_engine_turn") if the human is to act.
EngineAction engine_turn(const GameState& state, const PGrid& grid);

// Applies engine actions until the human is to act or the game ends.
void advance_engine(GameState& state, const PGrid& grid);

// Human action followed by the engine's synchronous reply.
void human_block(GameState& state, std::vector<Position> cells, const PGrid& grid);
void human_move(GameState& state, Position to, const PGrid& grid);

}  // namespace bwn
