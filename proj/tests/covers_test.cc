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

#include "bwn/covers.hpp"

#include <gtest/gtest.h>

namespace bwn {
namespace {

SequenceFamily identity() { return {{{"n", [](int64_t n) { return n; }, 1}}}; }

TEST(XiTest, Examples) {
  EXPECT_EQ(xi(identity(), 7, 100), 1u);
  EXPECT_EQ(xi(wythoff_family(), 4, 100), 1u);
  EXPECT_EQ(xi(case3_family(), 6, 100), 2u);
}

TEST(XiTest, IncompleteRange) {
  EXPECT_THROW(xi(identity(), 50, 10), IncompleteRangeError);
  EXPECT_THROW(check_exact_cover(identity(), 1, 50, 1, 10), IncompleteRangeError);
}

TEST(XiTest, NonMonotoneGenerator) {
  const SequenceFamily zigzag{{{"zigzag", [](int64_t n) { return n % 2 == 0 ? n : n - 2; }, 0}}};
  EXPECT_THROW(check_exact_cover(zigzag, 0, 20, 1, 100), MonotonicityError);
}

TEST(XiTest, AdditiveOverMembers) {
  const SequenceFamily fam = case3_family();
  for (int64_t x = 1; x < 300; ++x) {
    uint64_t sum = 0;
    for (const Sequence& s : fam.members) sum += xi({{s}}, x, 1000);
    EXPECT_EQ(xi(fam, x, 1000), sum);
  }
}

TEST(CoverTest, MergedPassMatchesPointwise) {
  for (const SequenceFamily& fam : {wythoff_family(), case1_family(), case3_family(0)}) {
    const CoverReport r = check_exact_cover(fam, 1, 2000, 1, 5000);
    std::vector<CoverViolation> expected;
    for (int64_t x = 1; x <= 2000; ++x) {
      const uint64_t c = xi(fam, x, 5000);
      if (c != 1) expected.push_back({x, c});
    }
    EXPECT_EQ(r.violations, expected);
  }
}

TEST(CoverTest, WythoffComplementary) {
  EXPECT_TRUE(check_exact_cover(wythoff_family(), 1, 1'000'000, 1, 1'000'002).exact());
}

TEST(CoverTest, CaseThreeTwoCover) {
  EXPECT_TRUE(check_exact_cover(case3_family(), 1, 1'000'000, 2, 1'000'002).exact());
}

TEST(CoverTest, CaseThreeLiteralIndexingDoubleCountsTwo) {
  const CoverReport r = check_exact_cover(case3_family(0), 1, 1'000'000, 2, 1'000'002);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], (CoverViolation{2, 3}));
}

TEST(CoverTest, CaseOneCoverFromThree) {
  EXPECT_TRUE(check_exact_cover(case1_family(), 3, 1'000'000, 1, 1'000'002).exact());
  // 1 and 2 are not covered.
  const CoverReport low = check_exact_cover(case1_family(), 1, 2, 1, 100);
  EXPECT_EQ(low.violations, (std::vector<CoverViolation>{{1, 0}, {2, 0}}));
}

}  // namespace
}  // namespace bwn
