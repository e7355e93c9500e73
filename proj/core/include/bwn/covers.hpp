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

// Finite-prefix verification of (exact) p-covers by nondecreasing integer
// sequences. Every result names the range it was checked on; nothing here
// claims more than that range.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwn {

// A generator did not pass the queried value within its index bound.
class IncompleteRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator decreased somewhere in the evaluated index range.
class MonotonicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sequence {
  std::string name;
  std::function<int64_t(int64_t)> term;
  int64_t start = 0;
};

struct SequenceFamily {
  std::vector<Sequence> members;
};

struct CoverViolation {
  int64_t x;
  uint64_t observed;

  friend bool operator==(const CoverViolation&, const CoverViolation&) = default;
};

struct CoverReport {
  uint64_t p = 1;
  int64_t lo = 0;
  int64_t hi = 0;  // inclusive
  std::vector<CoverViolation> violations;

  bool exact() const { return violations.empty(); }
};

// Occurrences of x over all members, each evaluated on indices
// [start, index_bound). Throws IncompleteRangeError if some member has not
// exceeded x by index_bound - 1.
uint64_t xi(const SequenceFamily& family, int64_t x, int64_t index_bound);

// Checks xi == p for every x in [lo, hi] by a merged pass over the members.
CoverReport check_exact_cover(const SequenceFamily& family, int64_t lo, int64_t hi, uint64_t p,
                              int64_t index_bound);

// Families from the k = 1, 2 arguments.
SequenceFamily wythoff_family();            // floor(phi n), floor(phi^2 n), n >= 1
SequenceFamily case1_family();              // 2 floor(phi n)+2, 2 floor(phi^2 n)+2, 2n+1, n >= 1
// n (n >= 1), 2n+1 (n >= 0), 2 floor(phi n)+2 (n >= 0), 2 floor(phi^2 n)+2
// starting at `phi2_start`. With phi2_start = 0 the cell (2,2) contributes
// the value 2 twice; phi2_start = 1 counts it once, as a board column does.
SequenceFamily case3_family(int64_t phi2_start = 1);

}  // namespace bwn
