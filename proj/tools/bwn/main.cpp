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

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "bwn/game.hpp"
#include "commands.hpp"

namespace {

const std::vector<std::string> kModes = {"all", "diag", "nim"};
const std::vector<std::string> kFlavors = {"blocking", "comply"};

}  // namespace

int main(int argc, char** argv) {
  using namespace bwn::service;
  CLI::App app{"Blocking Wythoff Nim solver, verifier and game service"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve a board and write the binary grid");
  solve_cmd->add_option("--k", solve.k, "blocking parameter")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--n", solve.n, "board side")->required()->check(CLI::PositiveNumber);
  std::string solve_mode = "all", solve_flavor = "blocking";
  solve_cmd->add_option("--mode", solve_mode, "all|diag|nim")->check(CLI::IsMember(kModes));
  solve_cmd->add_option("--flavor", solve_flavor, "blocking|comply")->check(CLI::IsMember(kFlavors));
  solve_cmd->add_option("--out", solve.out_path, "output file")->required();

  PairsArgs pairs;
  auto* pairs_cmd = app.add_subcommand("pairs", "print lexicographic P-pairs as CSV");
  pairs_cmd->add_option("--k", pairs.k)->required()->check(CLI::PositiveNumber);
  pairs_cmd->add_option("--n", pairs.n)->required()->check(CLI::PositiveNumber);
  std::string pairs_mode = "all";
  pairs_cmd->add_option("--mode", pairs_mode)->check(CLI::IsMember(kModes));
  pairs_cmd->add_option("--limit", pairs.limit, "number of rows (0 = all)");
  pairs_cmd->add_option("--format", pairs.format)->check(CLI::IsMember({"csv"}));

  std::string check;
  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification and print a JSON report");
  verify_cmd->add_option("check", check, "theorem1|prop2|terminal|duality|covers|cases")
      ->required()
      ->check(CLI::IsMember({"theorem1", "prop2", "terminal", "duality", "covers", "cases"}));
  verify_cmd->add_option("--k", verify.k)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", verify.n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--bound", verify.bound)->check(CLI::PositiveNumber);

  SplitsArgs splits;
  auto* analyze_cmd = app.add_subcommand("analyze", "asymptotic analyses");
  analyze_cmd->require_subcommand(1);
  auto* splits_cmd = analyze_cmd->add_subcommand("splits", "cluster the ratios b_i/a_i");
  splits_cmd->add_option("--k", splits.k)->required()->check(CLI::PositiveNumber);
  splits_cmd->add_option("--n", splits.n)->required()->check(CLI::PositiveNumber);
  splits_cmd->add_option("--tail", splits.tail, "tail fraction of indices");
  splits_cmd->add_option("--gap", splits.gap, "cluster split threshold");
  splits_cmd->add_option("--format", splits.format)->check(CLI::IsMember({"json"}));

  uint16_t port = 8080;
  uint64_t cache_mb = 256;
  auto* serve_cmd = app.add_subcommand("serve", "host the HTTP/JSON game service");
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--grid-cache-mb", cache_mb)->check(CLI::PositiveNumber);

  PlayArgs play;
  std::vector<bwn::Coord> start;
  auto* play_cmd = app.add_subcommand("play", "text-mode game against the engine");
  play_cmd->add_option("--k", play.k)->required()->check(CLI::PositiveNumber);
  play_cmd->add_option("--n", play.n)->required()->check(CLI::PositiveNumber);
  std::string play_mode = "all";
  play_cmd->add_option("--mode", play_mode)->check(CLI::IsMember(kModes));
  play_cmd->add_option("--start", start, "start position X Y")->expected(2);
  play_cmd->add_option("--human", play.human)->check(CLI::IsMember({"next", "previous"}));

  CLI11_PARSE(app, argc, argv);

  try {
    solve.mode = bwn::parse_mode(solve_mode);
    solve.flavor = bwn::parse_flavor(solve_flavor);
    pairs.mode = bwn::parse_mode(pairs_mode);
    play.mode = bwn::parse_mode(play_mode);
    if (*solve_cmd) return run_solve(solve, std::cout);
    if (*pairs_cmd) return run_pairs(pairs, std::cout);
    if (*verify_cmd) return run_verify_command(check, verify, std::cout);
    if (*splits_cmd) return run_splits(splits, std::cout);
    if (*serve_cmd) return run_serve(port, cache_mb, std::cerr);
    if (*play_cmd) {
      if (start.size() == 2) play.start = {start[0], start[1]};
      return run_play(play, std::cin, std::cout);
    }
  } catch (const bwn::GameError& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
