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

// Comply-flavor games: the previous player must propose a qualifying set of
// options, and the proposal becomes the mover's entire option set.
//   all:  at least k options
//   diag: at least k diagonal options, or at least one nim-type option
//   nim:  at least k nim-type options, or at least one diagonal option

#include <cstdint>
#include <optional>
#include <vector>

#include "bwn/grid.hpp"

namespace bwn {

struct ComplyRule {
  Mode mode = Mode::kAll;
  uint32_t k = 1;

  BlockingSpec spec() const { return {mode, Flavor::kComply, k}; }
};

// P iff the previous player can propose a qualifying set of N options, which
// (legality being monotone) means the N options qualify. Computed by its own
// sweep over N-option counts, so it never consults a blocking grid.
PGrid solve_comply(const ComplyRule& rule, uint32_t n);

// Comply on a single pile: positions (0, y) with only vertical options.
// With k = 1 this is Nim_1.
std::vector<Value> solve_comply_one_pile(uint32_t k, uint32_t piles);

struct DualityResult {
  bool holds = true;
  std::optional<Position> first_mismatch;
  uint64_t cells_checked = 0;
};

// True iff the comply grid is the cellwise complement of the blocking grid
// for the same mode and k.
DualityResult check_duality(const PGrid& comply, const PGrid& blocking);
DualityResult check_duality(Mode mode, uint32_t k, uint32_t n);

}  // namespace bwn
