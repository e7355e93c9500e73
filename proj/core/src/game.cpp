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

#include "bwn/game.hpp"

#include <algorithm>

namespace bwn {

std::string_view to_string(Role r) { return r == Role::kHuman ? "human" : "engine"; }
std::string_view to_string(Seat s) { return s == Seat::kNext ? "next" : "previous"; }
std::string_view to_string(Phase p) {
  return p == Phase::kAwaitBlock ? "await_block" : "await_move";
}
std::string_view to_string(Status s) {
  switch (s) {
    case Status::kOngoing:
      return "ongoing";
    case Status::kHumanWon:
      return "human_won";
    case Status::kEngineWon:
      return "engine_won";
  }
  return "?";
}

Seat parse_seat(std::string_view s) {
  if (s == "next") return Seat::kNext;
  if (s == "previous") return Seat::kPrevious;
  throw GameError("bad_request", "human must be \"next\" or \"previous\"");
}

std::vector<Position> GameState::legal_moves() const {
  std::vector<Position> out;
  for (const Move& m : options(position))
    if (!std::binary_search(blocked.begin(), blocked.end(), m.to)) out.push_back(m.to);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> GameState::blockable_options() const {
  std::vector<Position> out;
  for (const Move& m : options(position))
    if (is_blockable(spec.mode, m.cls)) out.push_back(m.to);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void finish(GameState& state, Role loser) {
  state.status = loser == Role::kHuman ? Status::kEngineWon : Status::kHumanWon;
}

// A mover facing a position without options has lost before any block.
void resolve_empty_position(GameState& state) {
  if (!state.over() && state.phase == Phase::kAwaitBlock && option_count(state.position) == 0) {
    state.history.push_back({state.mover(), {}, std::nullopt});
    finish(state, state.mover());
  }
}

void check_grid(const GameState& state, const PGrid& grid) {
  if (grid.spec() != state.spec || grid.n() != state.n)
    throw GameError("grid_mismatch", "grid does not match the session's spec and board");
}

}  // namespace

GameState new_game(const BlockingSpec& spec, uint32_t n, Position start, Seat human_seat,
                   const PGrid& grid, std::string id) {
  if (spec.k < 1 || spec.flavor != Flavor::kBlocking)
    throw GameError("unsupported_spec", "sessions host blocking games with k >= 1");
  if (n < 1 || start.x < 0 || start.y < 0 || start.x >= n || start.y >= n)
    throw GameError("invalid_start", "start position must lie on the board");
  GameState state;
  state.id = std::move(id);
  state.spec = spec;
  state.n = n;
  state.position = start;
  state.phase = Phase::kAwaitBlock;
  state.blocker = human_seat == Seat::kNext ? Role::kEngine : Role::kHuman;
  check_grid(state, grid);
  resolve_empty_position(state);
  advance_engine(state, grid);
  return state;
}

void apply_block(GameState& state, std::vector<Position> cells, Role actor) {
  if (state.over()) throw GameError("game_over", "the game has ended");
  if (state.phase != Phase::kAwaitBlock) throw GameError("wrong_phase", "not awaiting a block");
  if (actor != state.blocker)
    throw GameError("wrong_role", std::string(to_string(actor)) + " does not hold the blocking right");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.size() > state.block_budget())
    throw GameError("over_budget", "at most " + std::to_string(state.block_budget()) +
                                       " options may be blocked");
  for (const Position& c : cells) {
    if (!is_option(state.position, c))
      throw GameError("not_an_option", "blocked cell is not an option of the current position");
    if (!is_blockable(state.spec.mode, classify_move(state.position, c)))
      throw GameError("not_blockable", "this move class cannot be blocked in this game");
  }
  state.blocked = std::move(cells);
  state.phase = Phase::kAwaitMove;
  if (state.legal_moves().empty()) {
    state.history.push_back({state.mover(), state.blocked, std::nullopt});
    finish(state, state.mover());
  }
}

void apply_move(GameState& state, Position to, Role actor) {
  if (state.over()) throw GameError("game_over", "the game has ended");
  if (state.phase != Phase::kAwaitMove) throw GameError("wrong_phase", "not awaiting a move");
  if (actor != state.mover())
    throw GameError("wrong_role", std::string(to_string(actor)) + " is not the player to move");
  if (!is_option(state.position, to))
    throw GameError("illegal_move", "target is not a Wythoff Nim option of the current position");
  if (std::binary_search(state.blocked.begin(), state.blocked.end(), to))
    throw GameError("blocked_target", "target has been blocked");
  state.history.push_back({state.mover(), state.blocked, to});
  state.position = to;
  state.blocked.clear();
  state.blocker = state.mover();
  state.phase = Phase::kAwaitBlock;
  resolve_empty_position(state);
}

EngineAction engine_turn(const GameState& state, const PGrid& grid) {
  check_grid(state, grid);
  if (state.over()) throw GameError("game_over", "the game has ended");
  EngineAction action;
  if (state.phase == Phase::kAwaitBlock) {
    if (state.blocker != Role::kEngine) throw GameError("not_engine_turn", "human is to block");
    for (const Position& c : state.blockable_options()) {
      if (action.blocks.size() == state.block_budget()) break;
      if (grid.is_p(c)) action.blocks.push_back(c);
    }
    return action;
  }
  if (state.mover() != Role::kEngine) throw GameError("not_engine_turn", "human is to move");
  const auto moves = state.legal_moves();
  const auto winning = std::find_if(moves.begin(), moves.end(),
                                    [&](const Position& p) { return grid.is_p(p); });
  if (winning != moves.end())
    action.move = *winning;
  else if (!moves.empty())
    action.move = moves.front();
  return action;
}

void advance_engine(GameState& state, const PGrid& grid) {
  while (!state.over()) {
    const bool engine_blocks = state.phase == Phase::kAwaitBlock && state.blocker == Role::kEngine;
    const bool engine_moves = state.phase == Phase::kAwaitMove && state.mover() == Role::kEngine;
    if (!engine_blocks && !engine_moves) return;
    EngineAction action = engine_turn(state, grid);
    if (engine_blocks)
      apply_block(state, std::move(action.blocks), Role::kEngine);
    else
      apply_move(state, *action.move, Role::kEngine);
  }
}

void human_block(GameState& state, std::vector<Position> cells, const PGrid& grid) {
  check_grid(state, grid);
  apply_block(state, std::move(cells), Role::kHuman);
  advance_engine(state, grid);
}

void human_move(GameState& state, Position to, const PGrid& grid) {
  check_grid(state, grid);
  apply_move(state, to, Role::kHuman);
  advance_engine(state, grid);
}

}  // namespace bwn
