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

// P-position lists, column structure checks and asymptotic ratio estimates.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bwn/grid.hpp"

namespace bwn {

class InsufficientSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unordered P-positions {a_i, b_i}, a_i <= b_i, in lexicographic order.
struct PPairList {
  BlockingSpec spec;
  uint32_t n = 0;
  std::vector<Position> pairs;
  std::vector<Coord> deltas;  // b_i - a_i
  // Blocking/all grids only: largest x such that columns 0..x each hold
  // exactly k P cells. Pairs with a_i <= complete_through are all present;
  // beyond it, partners may lie past the board edge.
  std::optional<Coord> complete_through;

  size_t size() const { return pairs.size(); }
};

// Number of P cells in each column x of the ordered board.
std::vector<uint32_t> column_counts(const PGrid& grid);

PPairList extract_pairs(const PGrid& grid);

// The prefix of `list` with a_i <= complete_through (the whole list when
// completeness is unknown).
PPairList complete_prefix(const PPairList& list);

struct DifferenceViolation {
  Coord d;
  uint64_t count;
};

struct PropReport {
  uint32_t k = 0;
  uint32_t n = 0;
  uint32_t column0_count = 0;
  bool column0_is_initial_segment = false;  // exactly (0,0) .. (0,k-1)
  // Largest x with columns 0..x at exactly k cells; -1 if column 0 fails.
  Coord column_counts_ok_through = -1;
  std::vector<Coord> overfull_columns;
  std::vector<DifferenceViolation> difference_violations;
  uint64_t max_difference_multiplicity = 0;
  // P cells in columns 0..column_counts_ok_through, and the value of the
  // k * (x' - 1) expression for x' = column_counts_ok_through + 1.
  uint64_t cells_in_verified_columns = 0;
  uint64_t literal_prefix_formula = 0;

  bool passed() const {
    return column0_count == k && column0_is_initial_segment && overfull_columns.empty() &&
           difference_violations.empty();
  }
};

// Requires a blocking/all grid with parameter k; throws std::invalid_argument
// otherwise.
PropReport check_prop2(const PGrid& grid, uint32_t k);

struct Cluster {
  double center;
  uint64_t weight;
};

struct SplitEstimate {
  uint32_t k = 0;
  uint32_t n = 0;
  double tail_fraction = 0;
  double gap = 0;
  uint64_t samples = 0;
  std::vector<Cluster> clusters;
  // Present only for a single cluster.
  std::optional<double> alpha_hat;
  std::optional<double> beta_hat;
};

inline constexpr double kDefaultTailFraction = 0.25;
inline constexpr double kDefaultSplitGap = 0.15;
inline constexpr size_t kMinTailSamples = 100;

// Sorted gap splitting of b_i / a_i over the last tail_fraction of indices
// (pairs with a_i = 0 skipped). Throws InsufficientSampleError below
// kMinTailSamples.
SplitEstimate estimate_splits(const PPairList& list, double tail_fraction = kDefaultTailFraction,
                              double gap = kDefaultSplitGap);

// 1/alpha_hat + 1/beta_hat; throws InsufficientSampleError unless the
// estimate has exactly one cluster.
double harmonic_density(const SplitEstimate& estimate);
double harmonic_density_check(const PPairList& list, uint32_t k);

struct DeltaTrend {
  double first_half_max = 0;
  double second_half_max = 0;
};

// max |delta_i - i/2| over each half of the index range.
DeltaTrend delta_trend(const PPairList& list);

// CSV with header n,a_n,b_n,delta_n; `limit` caps the row count (0 = all).
void write_pairs_csv(std::ostream& out, const PPairList& list, size_t limit = 0);

}  // namespace bwn
