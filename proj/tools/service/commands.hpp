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

// Implementations of the `bwn` subcommands. Each returns the process exit
// code and writes its primary output to `out`.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bwn/rules.hpp"
#include "verify.hpp"

namespace bwn::service {

struct SolveArgs {
  uint32_t k = 2;
  uint32_t n = 1024;
  Mode mode = Mode::kAll;
  Flavor flavor = Flavor::kBlocking;
  std::string out_path;
};

struct PairsArgs {
  uint32_t k = 2;
  uint32_t n = 1024;
  Mode mode = Mode::kAll;
  size_t limit = 0;
  std::string format = "csv";
};

struct SplitsArgs {
  uint32_t k = 2;
  uint32_t n = 8192;
  double tail = 0.25;
  double gap = 0.15;
  std::string format = "json";
};

struct PlayArgs {
  uint32_t k = 2;
  uint32_t n = 64;
  Mode mode = Mode::kAll;
  Position start{8, 12};
  std::string human = "next";
};

int run_solve(const SolveArgs& args, std::ostream& out);
int run_pairs(const PairsArgs& args, std::ostream& out);
int run_verify_command(const std::string& what, const VerifyOptions& opt, std::ostream& out);
int run_splits(const SplitsArgs& args, std::ostream& out);
int run_serve(uint16_t port, uint64_t grid_cache_mb, std::ostream& log);
int run_play(const PlayArgs& args, std::istream& in, std::ostream& out);

}  // namespace bwn::service
