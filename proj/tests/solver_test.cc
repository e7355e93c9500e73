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

#include <gtest/gtest.h>

#include <random>

#include "bwn/closedforms.hpp"
#include "bwn/comply.hpp"

namespace bwn {
namespace {

constexpr BlockingSpec all(uint32_t k) { return {Mode::kAll, Flavor::kBlocking, k}; }

TEST(SolverTest, KnownPositions) {
  EXPECT_TRUE(solve_grid(all(2), 13).is_p(8, 12));
  EXPECT_TRUE(solve_grid(all(4), 8).is_p(2, 3));
  EXPECT_TRUE(solve_grid(all(1), 6).is_p(3, 5));
  EXPECT_TRUE(solve_grid(all(3), 5).is_p(1, 4));
  const PGrid g2 = solve_grid(all(2), 8);
  EXPECT_TRUE(g2.is_p(0, 1));
  EXPECT_FALSE(g2.is_p(1, 2));
  EXPECT_TRUE(solve_grid(all(5), 8).is_p(0, 4));
}

TEST(SolverTest, OptionCounts) {
  const PGrid g = solve_grid(all(2), 8);
  EXPECT_EQ(count_p_options(g, {1, 1}).f(), 3u);
  EXPECT_EQ(count_p_options(g, {2, 2}).f(), 1u);
  EXPECT_EQ(count_p_options(g, {0, 0}).f(), 0u);
  EXPECT_THROW(count_p_options(g, {8, 0}), std::out_of_range);
}

TEST(SolverTest, RejectsComplySpec) {
  EXPECT_THROW(solve_grid({Mode::kAll, Flavor::kComply, 2}, 8), std::invalid_argument);
  EXPECT_THROW(solve_grid(all(2), 0), CapacityError);
}

TEST(SolverTest, ClosedFormsForSmallK) {
  for (uint32_t k = 1; k <= 3; ++k) {
    const PGrid g = solve_grid(all(k), 300);
    const CandidateId id = candidate_for_k(k);
    for (Coord x = 0; x < 300; ++x)
      for (Coord y = 0; y < 300; ++y)
        ASSERT_EQ(g.is_p(x, y), member(id, {x, y})) << "k=" << k << " " << Position{x, y};
  }
}

TEST(SolverTest, SymmetricAndDeterministic) {
  for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly})
    for (uint32_t k = 1; k <= 6; ++k) {
      const BlockingSpec spec{mode, Flavor::kBlocking, k};
      const PGrid g = solve_grid(spec, 200);
      EXPECT_EQ(g, solve_grid(spec, 200));
      for (Coord x = 0; x < 200; ++x)
        for (Coord y = 0; y < x; ++y) ASSERT_EQ(g.is_p(x, y), g.is_p(y, x)) << spec;
    }
}

TEST(SolverTest, PrefixStable) {
  // A smaller board is the corner of a larger one.
  const PGrid small = solve_grid(all(5), 100);
  const PGrid big = solve_grid(all(5), 333);
  for (Coord x = 0; x < 100; ++x)
    for (Coord y = 0; y < 100; ++y) ASSERT_EQ(small.is_p(x, y), big.is_p(x, y));
}

TEST(SolverTest, RecurrenceHoldsCellwise) {
  for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly}) {
    const PGrid g = solve_grid({mode, Flavor::kBlocking, 3}, 64);
    for (Coord x = 0; x < 64; ++x)
      for (Coord y = 0; y < 64; ++y) {
        const OptionCounts c = count_p_options(g, {x, y});
        ASSERT_EQ(g.is_p(x, y), blocking_is_p(mode, 3, c.v, c.h, c.d));
      }
  }
}

class OracleTest : public ::testing::TestWithParam<std::tuple<Mode, Flavor, uint32_t>> {};

TEST_P(OracleTest, AgreesWithSweepOn24Board) {
  const auto [mode, flavor, k] = GetParam();
  const BlockingSpec spec{mode, flavor, k};
  BruteForceOracle oracle(spec);
  const PGrid g = flavor == Flavor::kBlocking ? solve_grid(spec, 24) : solve_comply({mode, k}, 24);
  for (Coord x = 0; x < 24; ++x)
    for (Coord y = 0; y < 24; ++y)
      ASSERT_EQ(oracle.value({x, y}) == Value::kP, g.is_p(x, y)) << spec << " " << Position{x, y};
}

INSTANTIATE_TEST_SUITE_P(
    AllSpecs, OracleTest,
    ::testing::Combine(::testing::Values(Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly),
                       ::testing::Values(Flavor::kBlocking, Flavor::kComply),
                       ::testing::Values(1u, 2u, 3u, 4u)));

TEST(OracleTest, ExplicitEnumerationMatchesCountingShortcut) {
  // A zero budget forces the counting characterization everywhere.
  for (Flavor flavor : {Flavor::kBlocking, Flavor::kComply})
    for (Mode mode : {Mode::kAll, Mode::kDiagOnly, Mode::kNimOnly}) {
      const BlockingSpec spec{mode, flavor, 3};
      BruteForceOracle explicit_oracle(spec, uint64_t{1} << 20);
      BruteForceOracle shortcut(spec, 0);
      for (Coord x = 0; x < 6; ++x)
        for (Coord y = 0; y < 6; ++y)
          ASSERT_EQ(explicit_oracle.value({x, y}), shortcut.value({x, y})) << spec << Position{x, y};
    }
}

}  // namespace
}  // namespace bwn
