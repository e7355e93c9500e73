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

#include <cstdint>
#include <unordered_map>

#include "bwn/grid.hpp"
#include "bwn/rules.hpp"

namespace bwn {

// Per-class counts of options lying in some reference set. The classes are
// the move classes of `options()`: v keeps x and lowers y, h keeps y and
// lowers x.
struct OptionCounts {
  uint64_t v = 0;
  uint64_t h = 0;
  uint64_t d = 0;

  uint64_t f() const { return v + h + d; }
  uint64_t nim() const { return v + h; }

  friend constexpr bool operator==(const OptionCounts&, const OptionCounts&) = default;
};

// P/N decision of a blocking game from the counts of P options.
//   all:  P iff v + h + d < k
//   diag: P iff d < k and v + h == 0  (nim-type P options cannot be blocked)
//   nim:  P iff v + h < k and d == 0
constexpr bool blocking_is_p(Mode mode, uint32_t k, uint64_t v, uint64_t h, uint64_t d) {
  switch (mode) {
    case Mode::kAll:
      return v + h + d < k;
    case Mode::kDiagOnly:
      return d < k && v + h == 0;
    case Mode::kNimOnly:
      return v + h < k && d == 0;
  }
  return false;
}

// Solves a BLOCKING-flavor spec on the n x n board by one row-major sweep.
// Throws std::invalid_argument for comply specs, CapacityError for oversized
// boards.
PGrid solve_grid(const BlockingSpec& spec, uint32_t n);

// Direct recount of P options of p in `grid`; throws std::out_of_range.
OptionCounts count_p_options(const PGrid& grid, Position p);

// Memoized game search taken straight from the rules: for small option sets
// the blocking (or proposing) maneuver is enumerated explicitly, otherwise
// the counting characterization is applied over recursively computed option
// values. Shares no state with the sweep solvers.
class BruteForceOracle {
 public:
  explicit BruteForceOracle(BlockingSpec spec, uint64_t subset_budget = 4096);

  Value value(Position p);

  const BlockingSpec& spec() const { return spec_; }
  size_t memo_size() const { return memo_.size(); }

 private:
  struct PositionHash {
    size_t operator()(const Position& p) const noexcept {
      return std::hash<uint64_t>{}((static_cast<uint64_t>(p.x) << 32) ^ static_cast<uint64_t>(p.y));
    }
  };

  Value blocking_value(Position p);
  Value comply_value(Position p);

  BlockingSpec spec_;
  uint64_t subset_budget_;
  std::unordered_map<Position, Value, PositionHash> memo_;
};

// One-shot convenience wrapper around BruteForceOracle. Intended for
// x + y up to a few hundred.
Value brute_force_value(const BlockingSpec& spec, Position p);

}  // namespace bwn
