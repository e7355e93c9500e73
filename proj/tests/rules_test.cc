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

#include "bwn/rules.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace bwn {
namespace {

TEST(OptionsTest, TerminalHasNone) { EXPECT_TRUE(options({0, 0}).empty()); }

TEST(OptionsTest, OneOne) {
  const std::vector<Move> expected = {{{1, 0}, MoveClass::kVertical},
                                      {{0, 1}, MoveClass::kHorizontal},
                                      {{0, 0}, MoveClass::kDiagonal}};
  const auto got = options({1, 1});
  EXPECT_EQ(std::set<Position>({{1, 0}, {0, 1}, {0, 0}}),
            std::set<Position>({got[0].to, got[1].to, got[2].to}));
  for (const Move& m : expected)
    EXPECT_NE(std::find(got.begin(), got.end(), m), got.end()) << m.to;
}

TEST(OptionsTest, TwoOne) {
  const auto got = options({2, 1});
  ASSERT_EQ(got.size(), 4u);
  for (const Move& m : std::vector<Move>{{{2, 0}, MoveClass::kVertical},
                                         {{1, 1}, MoveClass::kHorizontal},
                                         {{0, 1}, MoveClass::kHorizontal},
                                         {{1, 0}, MoveClass::kDiagonal}})
    EXPECT_NE(std::find(got.begin(), got.end(), m), got.end()) << m.to;
}

TEST(OptionsTest, CountsAndClassesAgreeOnRandomPositions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> coord(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    const Position p{coord(rng), coord(rng)};
    const auto opts = options(p);
    EXPECT_EQ(static_cast<Coord>(opts.size()), option_count(p));
    std::set<Position> seen;
    for (const Move& m : opts) {
      EXPECT_TRUE(seen.insert(m.to).second) << "duplicate option " << m.to;
      EXPECT_TRUE(is_option(p, m.to));
      EXPECT_EQ(classify_move(p, m.to), m.cls);
      EXPECT_GE(m.to.x, 0);
      EXPECT_GE(m.to.y, 0);
    }
    // Options of the mirror are the mirrored options.
    const auto mirrored = options(p.mirror());
    std::set<Position> mirror_set;
    for (const Move& m : mirrored) mirror_set.insert(m.to.mirror());
    EXPECT_EQ(seen, mirror_set);
  }
}

TEST(OptionsTest, NonMovesRejected) {
  EXPECT_FALSE(is_option({2, 1}, {2, 2}));
  EXPECT_FALSE(is_option({3, 3}, {3, 3}));
  EXPECT_FALSE(is_option({4, 5}, {2, 4}));
  EXPECT_TRUE(is_option({11, 15}, {8, 12}));
  EXPECT_EQ(classify_move({11, 15}, {8, 12}), MoveClass::kDiagonal);
}

TEST(SpecTest, ParseAndValidate) {
  EXPECT_EQ(parse_mode("diag"), Mode::kDiagOnly);
  EXPECT_EQ(parse_mode("nim"), Mode::kNimOnly);
  EXPECT_EQ(parse_flavor("comply"), Flavor::kComply);
  EXPECT_THROW(parse_mode("both"), std::invalid_argument);
  EXPECT_THROW((BlockingSpec{Mode::kAll, Flavor::kBlocking, 0}.validate()), std::invalid_argument);
  EXPECT_TRUE(is_blockable(Mode::kDiagOnly, MoveClass::kDiagonal));
  EXPECT_FALSE(is_blockable(Mode::kDiagOnly, MoveClass::kVertical));
  EXPECT_FALSE(is_blockable(Mode::kNimOnly, MoveClass::kDiagonal));
}

TEST(TerminalTest, SmallSets) {
  EXPECT_EQ(terminal_set(1).cells, std::set<Position>({{0, 0}}));
  EXPECT_EQ(terminal_set(2).cells, std::set<Position>({{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(terminal_set(3).cells, std::set<Position>({{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}}));
  EXPECT_EQ(terminal_count(1), 1u);
  EXPECT_EQ(terminal_count(2), 3u);
  EXPECT_EQ(terminal_count(3), 5u);
}

TEST(TerminalTest, CountFormulaAndLowerIdealUpTo50) {
  for (uint32_t k = 1; k <= 50; ++k) {
    const TerminalSet t = terminal_set(k);
    EXPECT_EQ(t.cells.size(), terminal_count(k)) << "k=" << k;
    uint64_t direct = 0;
    for (Coord x = 0; x <= k; ++x)
      for (Coord y = 0; y <= k; ++y) {
        const bool few = option_count({x, y}) < k;
        direct += few;
        EXPECT_EQ(is_terminal(k, {x, y}), few);
        EXPECT_EQ(t.contains({x, y}), few);
      }
    EXPECT_EQ(direct, terminal_count(k)) << "k=" << k;
    for (const Position& p : t.cells) {
      EXPECT_TRUE(t.contains(p.mirror()));
      for (const Move& m : options(p)) EXPECT_TRUE(t.contains(m.to)) << p << " -> " << m.to;
    }
  }
}

}  // namespace
}  // namespace bwn
