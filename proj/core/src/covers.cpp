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

#include <limits>

#include "bwn/closedforms.hpp"

namespace bwn {
namespace {

[[noreturn]] void incomplete(const Sequence& s, int64_t x, int64_t index_bound) {
  throw IncompleteRangeError("sequence '" + s.name + "' has not passed " + std::to_string(x) +
                             " before index " + std::to_string(index_bound));
}

[[noreturn]] void decreasing(const Sequence& s, int64_t i) {
  throw MonotonicityError("sequence '" + s.name + "' decreases at index " + std::to_string(i));
}

// Walks one member in index order.
class Cursor {
 public:
  Cursor(const Sequence& s, int64_t index_bound)
      : seq_(&s), bound_(index_bound), index_(s.start) {
    if (index_ < bound_) value_ = seq_->term(index_);
  }

  // Number of terms equal to x; leaves the cursor on the first term > x.
  uint64_t consume(int64_t x) {
    uint64_t count = 0;
    while (true) {
      if (index_ >= bound_) incomplete(*seq_, x, bound_);
      if (value_ > x) return count;
      if (value_ == x) ++count;
      step();
    }
  }

 private:
  void step() {
    ++index_;
    if (index_ >= bound_) return;
    const int64_t next = seq_->term(index_);
    if (next < value_) decreasing(*seq_, index_);
    value_ = next;
  }

  const Sequence* seq_;
  int64_t bound_;
  int64_t index_;
  int64_t value_ = 0;
};

int64_t phi(int64_t n) { return static_cast<int64_t>(floor_phi(static_cast<uint64_t>(n))); }
int64_t phi2(int64_t n) { return static_cast<int64_t>(floor_phi2(static_cast<uint64_t>(n))); }

}  // namespace

uint64_t xi(const SequenceFamily& family, int64_t x, int64_t index_bound) {
  uint64_t total = 0;
  for (const Sequence& s : family.members) {
    if (index_bound <= s.start || s.term(index_bound - 1) <= x) incomplete(s, x, index_bound);
    int64_t prev = s.term(s.start);
    for (int64_t i = s.start; i < index_bound; ++i) {
      const int64_t v = s.term(i);
      if (v < prev) decreasing(s, i);
      prev = v;
      if (v > x) break;
      total += v == x;
    }
  }
  return total;
}

CoverReport check_exact_cover(const SequenceFamily& family, int64_t lo, int64_t hi, uint64_t p,
                              int64_t index_bound) {
  if (lo > hi) throw std::invalid_argument("empty cover range");
  CoverReport report{p, lo, hi, {}};
  std::vector<Cursor> cursors;
  cursors.reserve(family.members.size());
  for (const Sequence& s : family.members) {
    cursors.emplace_back(s, index_bound);
    if (lo > std::numeric_limits<int64_t>::min()) cursors.back().consume(lo - 1);
  }
  for (int64_t x = lo; x <= hi; ++x) {
    uint64_t count = 0;
    for (Cursor& c : cursors) count += c.consume(x);
    if (count != p) report.violations.push_back({x, count});
  }
  return report;
}

SequenceFamily wythoff_family() {
  return {{{"floor(phi n)", phi, 1}, {"floor(phi^2 n)", phi2, 1}}};
}

SequenceFamily case1_family() {
  return {{{"2 floor(phi n)+2", [](int64_t n) { return 2 * phi(n) + 2; }, 1},
           {"2 floor(phi^2 n)+2", [](int64_t n) { return 2 * phi2(n) + 2; }, 1},
           {"2n+1", [](int64_t n) { return 2 * n + 1; }, 1}}};
}

SequenceFamily case3_family(int64_t phi2_start) {
  return {{{"n", [](int64_t n) { return n; }, 1},
           {"2n+1", [](int64_t n) { return 2 * n + 1; }, 0},
           {"2 floor(phi n)+2", [](int64_t n) { return 2 * phi(n) + 2; }, 0},
           {"2 floor(phi^2 n)+2", [](int64_t n) { return 2 * phi2(n) + 2; }, phi2_start}}};
}

}  // namespace bwn
