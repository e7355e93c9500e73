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

#include <gtest/gtest.h>

#include "bwn/solver.hpp"

namespace bwn {
namespace {

TEST(ComplyTest, OnePileNim) {
  const auto v = solve_comply_one_pile(1, 50);
  EXPECT_EQ(v[0], Value::kN);
  for (size_t m = 1; m < v.size(); ++m) EXPECT_EQ(v[m], Value::kP) << m;
}

TEST(ComplyTest, OnePileMatchesGridEdge) {
  // Cells (0,y) have only same-pile options, so the board edge replays the
  // one-pile game.
  for (uint32_t k = 1; k <= 5; ++k) {
    const auto v = solve_comply_one_pile(k, 64);
    for (Mode mode : {Mode::kAll, Mode::kNimOnly}) {
      const PGrid g = solve_comply({mode, k}, 64);
      for (Coord y = 0; y < 64; ++y)
        ASSERT_EQ(g.is_p(0, y), v[static_cast<size_t>(y)] == Value::kP) << "k=" << k << " y=" << y;
    }
  }
}

TEST(ComplyTest, KnownValues) {
  const PGrid g = solve_comply({Mode::kAll, 2}, 64);
  EXPECT_FALSE(g.is_p(8, 12));
  for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly})
    for (uint32_t k = 1; k <= 4; ++k) EXPECT_FALSE(solve_comply({mode, k}, 8).is_p(0, 0));
}

TEST(ComplyTest, FewOptionsAreN) {
  for (uint32_t k = 1; k <= 8; ++k) {
    const PGrid g = solve_comply({Mode::kAll, k}, 32);
    for (Coord x = 0; x < 32; ++x)
      for (Coord y = 0; y < 32; ++y)
        if (option_count({x, y}) < k) {
          ASSERT_FALSE(g.is_p(x, y)) << k << Position{x, y};
        }
  }
}

TEST(ComplyTest, Symmetric) {
  for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly}) {
    const PGrid g = solve_comply({mode, 3}, 128);
    for (Coord x = 0; x < 128; ++x)
      for (Coord y = 0; y < x; ++y) ASSERT_EQ(g.is_p(x, y), g.is_p(y, x));
  }
}

TEST(DualityTest, KnownCases) {
  EXPECT_TRUE(check_duality(Mode::kAll, 2, 256).holds);
  EXPECT_TRUE(check_duality(Mode::kDiagOnly, 3, 256).holds);
  EXPECT_TRUE(check_duality(Mode::kAll, 1, 256).holds);
}

TEST(DualityTest, AllModesSmallK) {
  for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly})
    for (uint32_t k = 1; k <= 6; ++k) {
      const DualityResult r = check_duality(mode, k, 512);
      EXPECT_TRUE(r.holds) << to_string(mode) << " k=" << k;
      EXPECT_EQ(r.cells_checked, 512u * 512u);
    }
}

TEST(DualityTest, ReportsFirstMismatch) {
  const PGrid comply = solve_comply({Mode::kAll, 2}, 20);
  PGrid blocking = solve_grid({Mode::kAll, Flavor::kBlocking, 2}, 20);
  blocking.set(5, 7, !blocking.is_p(5, 7));
  blocking.set(9, 9, !blocking.is_p(9, 9));
  const DualityResult r = check_duality(comply, blocking);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(*r.first_mismatch, (Position{5, 7}));
  EXPECT_THROW(check_duality(comply, solve_grid({Mode::kAll, Flavor::kBlocking, 3}, 20)),
               std::invalid_argument);
}

}  // namespace
}  // namespace bwn
