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

#include "bwn/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "sweep.hpp"

namespace bwn {

PGrid solve_grid(const BlockingSpec& spec, uint32_t n) {
  spec.validate();
  if (spec.flavor != Flavor::kBlocking)
    throw std::invalid_argument("solve_grid expects a blocking spec; use solve_comply");
  PGrid grid(spec, n);
  const uint32_t k = spec.k;
  switch (spec.mode) {
    case Mode::kAll:
      detail::sweep(grid, [k](uint32_t, uint32_t, uint32_t v, uint32_t h, uint32_t d) {
        return v + h + d < k;
      });
      break;
    case Mode::kDiagOnly:
      detail::sweep(grid, [k](uint32_t, uint32_t, uint32_t v, uint32_t h, uint32_t d) {
        return d < k && v + h == 0;
      });
      break;
    case Mode::kNimOnly:
      detail::sweep(grid, [k](uint32_t, uint32_t, uint32_t v, uint32_t h, uint32_t d) {
        return v + h < k && d == 0;
      });
      break;
  }
  return grid;
}

OptionCounts count_p_options(const PGrid& grid, Position p) {
  if (!grid.contains(p)) throw std::out_of_range("position outside the board");
  OptionCounts c;
  for (Coord y = 0; y < p.y; ++y) c.v += grid.is_p(p.x, y);
  for (Coord x = 0; x < p.x; ++x) c.h += grid.is_p(x, p.y);
  for (Coord i = 1; i <= std::min(p.x, p.y); ++i) c.d += grid.is_p(p.x - i, p.y - i);
  return c;
}

BruteForceOracle::BruteForceOracle(BlockingSpec spec, uint64_t subset_budget)
    : spec_(spec), subset_budget_(subset_budget) {
  spec_.validate();
}

Value BruteForceOracle::value(Position p) {
  if (p.x < 0 || p.y < 0) throw std::invalid_argument("negative coordinate");
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  const Value v = spec_.flavor == Flavor::kBlocking ? blocking_value(p) : comply_value(p);
  memo_.emplace(p, v);
  return v;
}

namespace {

// sum_{s <= r} C(m, s), saturating at `cap`.
uint64_t subsets_up_to(uint64_t m, uint64_t r, uint64_t cap) {
  uint64_t total = 0;
  uint64_t binom = 1;
  for (uint64_t s = 0; s <= r && s <= m; ++s) {
    total += binom;
    if (total > cap) return cap + 1;
    binom = binom * (m - s) / (s + 1);
    if (binom > cap) binom = cap + 1;
  }
  return total;
}

}  // namespace

// The previous player wins iff some legal block leaves the next player only
// moves into N positions.
Value BruteForceOracle::blocking_value(Position p) {
  const auto opts = options(p);
  std::vector<bool> is_p(opts.size());
  std::vector<size_t> blockable;
  for (size_t i = 0; i < opts.size(); ++i) {
    is_p[i] = value(opts[i].to) == Value::kP;
    if (is_blockable(spec_.mode, opts[i].cls)) blockable.push_back(i);
  }
  const uint64_t budget = spec_.k - 1;

  if (subsets_up_to(blockable.size(), budget, subset_budget_) <= subset_budget_) {
    uint64_t open_p = static_cast<uint64_t>(std::count(is_p.begin(), is_p.end(), true));
    // Enumerate every block set of size <= k-1 over the blockable options;
    // open_p tracks the P options the mover can still reach.
    auto search = [&](auto&& self, size_t start, uint64_t remaining) -> bool {
      if (open_p == 0) return true;
      if (remaining == 0) return false;
      for (size_t b = start; b < blockable.size(); ++b) {
        const bool hits_p = is_p[blockable[b]];
        open_p -= hits_p;
        const bool found = self(self, b + 1, remaining - 1);
        open_p += hits_p;
        if (found) return true;
      }
      return false;
    };
    return search(search, 0, budget) ? Value::kP : Value::kN;
  }

  // Too many block sets: the only useful blocks are P options, so the
  // previous player wins iff all P options are blockable and at most k-1.
  uint64_t blockable_p = 0;
  for (size_t i = 0; i < opts.size(); ++i) {
    if (!is_p[i]) continue;
    if (!is_blockable(spec_.mode, opts[i].cls)) return Value::kN;
    ++blockable_p;
  }
  return blockable_p <= budget ? Value::kP : Value::kN;
}

// The previous player wins iff some legal proposal contains only N options.
Value BruteForceOracle::comply_value(Position p) {
  const auto opts = options(p);
  const uint64_t k = spec_.k;
  auto legal = [&](uint64_t diag, uint64_t nim) {
    switch (spec_.mode) {
      case Mode::kAll:
        return diag + nim >= k;
      case Mode::kDiagOnly:
        return diag >= k || nim >= 1;
      case Mode::kNimOnly:
        return nim >= k || diag >= 1;
    }
    return false;
  };

  std::vector<bool> is_n(opts.size());
  for (size_t i = 0; i < opts.size(); ++i) is_n[i] = value(opts[i].to) == Value::kN;

  if (opts.size() < 63 && (uint64_t{1} << opts.size()) <= subset_budget_) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << opts.size()); ++mask) {
      uint64_t diag = 0, nim = 0;
      bool all_n = true;
      for (size_t i = 0; i < opts.size() && all_n; ++i) {
        if (!((mask >> i) & 1)) continue;
        all_n = is_n[i];
        (opts[i].cls == MoveClass::kDiagonal ? diag : nim) += 1;
      }
      if (all_n && legal(diag, nim)) return Value::kP;
    }
    return Value::kN;
  }

  // Legality is monotone in the proposal, so proposing every N option is
  // optimal.
  uint64_t diag = 0, nim = 0;
  for (size_t i = 0; i < opts.size(); ++i)
    if (is_n[i]) (opts[i].cls == MoveClass::kDiagonal ? diag : nim) += 1;
  return legal(diag, nim) ? Value::kP : Value::kN;
}

Value brute_force_value(const BlockingSpec& spec, Position p) {
  BruteForceOracle oracle(spec);
  return oracle.value(p);
}

}  // namespace bwn
