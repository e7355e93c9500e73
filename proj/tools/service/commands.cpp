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

#include "commands.hpp"

#include <httplib.h>

#include <iostream>
#include <sstream>

#include "bwn/analysis.hpp"
#include "bwn/grid_cache.hpp"
#include "bwn/solver.hpp"
#include "game_service.hpp"

namespace bwn::service {

int run_solve(const SolveArgs& args, std::ostream& out) {
  const BlockingSpec spec{args.mode, args.flavor, args.k};
  const PGrid grid = solve_any(spec, args.n);
  save_grid(args.out_path, grid);
  out << json{{"spec", {{"mode", to_string(spec.mode)}, {"flavor", to_string(spec.flavor)}, {"k", spec.k}}},
              {"n", args.n},
              {"p_cells", grid.count_p()},
              {"out", args.out_path}}
             .dump()
      << '\n';
  return 0;
}

int run_pairs(const PairsArgs& args, std::ostream& out) {
  if (args.format != "csv") throw std::invalid_argument("pairs supports --format csv only");
  const PGrid grid = solve_grid({args.mode, Flavor::kBlocking, args.k}, args.n);
  write_pairs_csv(out, extract_pairs(grid), args.limit);
  return 0;
}

int run_verify_command(const std::string& what, const VerifyOptions& opt, std::ostream& out) {
  const json report = run_verify(what, opt);
  out << report.dump(2) << '\n';
  return report.at("passed").get<bool>() ? 0 : 1;
}

int run_splits(const SplitsArgs& args, std::ostream& out) {
  if (args.format != "json") throw std::invalid_argument("analyze splits supports --format json only");
  const PGrid grid = solve_grid({Mode::kAll, Flavor::kBlocking, args.k}, args.n);
  const PPairList list = extract_pairs(grid);
  const PPairList window = complete_prefix(list);
  json j = to_json(estimate_splits(window, args.tail, args.gap));
  j["complete_through"] = list.complete_through ? json(*list.complete_through) : json(nullptr);
  j["window_pairs"] = window.size();
  out << j.dump(2) << '\n';
  return 0;
}

int run_serve(uint16_t port, uint64_t grid_cache_mb, std::ostream& log) {
  GameService service(grid_cache_mb * 1024 * 1024);
  httplib::Server server;
  service.mount(server);
  log << "serving on 0.0.0.0:" << port << " (grid cache " << grid_cache_mb << " MiB)" << std::endl;
  return server.listen("0.0.0.0", port) ? 0 : 1;
}

namespace {

void show(const GameState& s, std::ostream& out) {
  out << "position " << s.position << "  phase " << to_string(s.phase) << "  status "
      << to_string(s.status) << '\n';
  if (!s.blocked.empty()) {
    out << "blocked:";
    for (const Position& p : s.blocked) out << ' ' << p;
    out << '\n';
  }
  if (!s.over() && s.phase == Phase::kAwaitMove && s.mover() == Role::kHuman) {
    out << "your moves:";
    for (const Position& p : s.legal_moves()) out << ' ' << p;
    out << '\n';
  }
  if (!s.over() && s.phase == Phase::kAwaitBlock && s.blocker == Role::kHuman)
    out << "block up to " << s.block_budget() << " options\n";
}

}  // namespace

int run_play(const PlayArgs& args, std::istream& in, std::ostream& out) {
  const BlockingSpec spec{args.mode, Flavor::kBlocking, args.k};
  const PGrid grid = solve_grid(spec, args.n);
  GameState state = new_game(spec, args.n, args.start, parse_seat(args.human), grid, "local");
  out << "commands: move X Y | block X Y [X Y ...] | block | quit\n";
  show(state, out);
  std::string line;
  while (!state.over() && std::getline(in, line)) {
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    if (cmd == "quit") break;
    std::vector<Coord> nums;
    for (Coord v; words >> v;) nums.push_back(v);
    try {
      if (cmd == "move" && nums.size() == 2) {
        human_move(state, {nums[0], nums[1]}, grid);
      } else if (cmd == "block" && nums.size() % 2 == 0) {
        std::vector<Position> cells;
        for (size_t i = 0; i < nums.size(); i += 2) cells.push_back({nums[i], nums[i + 1]});
        human_block(state, std::move(cells), grid);
      } else {
        out << "unrecognized command\n";
        continue;
      }
    } catch (const GameError& e) {
      out << "rejected (" << e.code() << "): " << e.what() << '\n';
      continue;
    }
    if (!state.history.empty()) {
      const TurnRecord& last = state.history.back();
      if (last.mover == Role::kEngine && last.move) out << "engine moves to " << *last.move << '\n';
    }
    show(state, out);
  }
  if (state.over()) out << (state.status == Status::kHumanWon ? "you win\n" : "engine wins\n");
  return 0;
}

}  // namespace bwn::service
