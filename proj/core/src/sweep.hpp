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

// Row-major sweep shared by the blocking and comply solvers.
//
// Every option of (x, y) lies in an earlier row or earlier in the same row,
// so one pass with running counters decides each cell from finished cells:
//   column[x]          marked cells (x, y') with y' < y   (class v)
//   row                marked cells (x', y) with x' < x   (class h)
//   diagonal[x-y+n-1]  marked cells (x-i, y-i), i > 0     (class d)

#include <cstdint>
#include <vector>

#include "bwn/grid.hpp"

namespace bwn::detail {

// decide(x, y, v, h, d) returns whether cell (x, y) is marked given the
// counts of marked options per class.
template <class Decide>
void sweep(PGrid& grid, Decide&& decide) {
  const uint32_t n = grid.n();
  std::vector<uint32_t> column(n, 0);
  std::vector<uint32_t> diagonal(2 * static_cast<size_t>(n) - 1, 0);
  auto words = grid.words();
  uint64_t word = 0;
  uint64_t index = 0;
  for (uint32_t y = 0; y < n; ++y) {
    uint32_t row = 0;
    uint32_t* diag = diagonal.data() + (n - 1 - y);
    for (uint32_t x = 0; x < n; ++x, ++index) {
      if (decide(x, y, column[x], row, diag[x])) {
        ++column[x];
        ++row;
        ++diag[x];
        word |= uint64_t{1} << (index & 63);
      }
      if ((index & 63) == 63) {
        words[index >> 6] = word;
        word = 0;
      }
    }
  }
  if ((index & 63) != 0) words[index >> 6] = word;
}

}  // namespace bwn::detail
