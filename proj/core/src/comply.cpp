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

#include "bwn/comply.hpp"

#include <algorithm>
#include <bit>

#include "bwn/solver.hpp"

#include "sweep.hpp"

namespace bwn {

PGrid solve_comply(const ComplyRule& rule, uint32_t n) {
  PGrid grid(rule.spec(), n);
  const uint32_t k = rule.k;
  // Counters hold comply-P options; N options are the class size minus them.
  switch (rule.mode) {
    case Mode::kAll:
      detail::sweep(grid, [k](uint32_t x, uint32_t y, uint32_t v, uint32_t h, uint32_t d) {
        const uint64_t n_opts = uint64_t{x} + y + std::min(x, y) - v - h - d;
        return n_opts >= k;
      });
      break;
    case Mode::kDiagOnly:
      detail::sweep(grid, [k](uint32_t x, uint32_t y, uint32_t v, uint32_t h, uint32_t d) {
        const uint64_t n_diag = std::min(x, y) - d;
        const uint64_t n_nim = uint64_t{x} + y - v - h;
        return n_diag >= k || n_nim >= 1;
      });
      break;
    case Mode::kNimOnly:
      detail::sweep(grid, [k](uint32_t x, uint32_t y, uint32_t v, uint32_t h, uint32_t d) {
        const uint64_t n_diag = std::min(x, y) - d;
        const uint64_t n_nim = uint64_t{x} + y - v - h;
        return n_nim >= k || n_diag >= 1;
      });
      break;
  }
  return grid;
}

std::vector<Value> solve_comply_one_pile(uint32_t k, uint32_t piles) {
  std::vector<Value> values(piles, Value::kN);
  uint64_t p_below = 0;
  for (uint32_t m = 0; m < piles; ++m) {
    const uint64_t n_options = m - p_below;
    values[m] = n_options >= k ? Value::kP : Value::kN;
    p_below += values[m] == Value::kP;
  }
  return values;
}

DualityResult check_duality(const PGrid& comply, const PGrid& blocking) {
  if (comply.n() != blocking.n() || comply.spec().mode != blocking.spec().mode ||
      comply.spec().k != blocking.spec().k)
    throw std::invalid_argument("duality compares grids of the same mode, k and n");
  DualityResult r;
  const uint32_t n = comply.n();
  // Whole-word complement check first; locate a cell only on failure.
  const auto cw = comply.words();
  const auto bw = blocking.words();
  const uint64_t cells = comply.cell_count();
  for (size_t w = 0; w < cw.size(); ++w) {
    uint64_t mask = ~uint64_t{0};
    if (w == cw.size() - 1 && cells % 64 != 0) mask = (uint64_t{1} << (cells % 64)) - 1;
    const uint64_t bad = ~(cw[w] ^ bw[w]) & mask;
    if (bad != 0 && r.holds) {
      const uint64_t i = w * 64 + static_cast<uint64_t>(std::countr_zero(bad));
      r.holds = false;
      r.first_mismatch = Position{static_cast<Coord>(i % n), static_cast<Coord>(i / n)};
    }
  }
  r.cells_checked = cells;
  return r;
}

DualityResult check_duality(Mode mode, uint32_t k, uint32_t n) {
  return check_duality(solve_comply({mode, k}, n), solve_grid({mode, Flavor::kBlocking, k}, n));
}

}  // namespace bwn
