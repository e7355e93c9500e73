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

#include "bwn/closedforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bwn {

unsigned __int128 isqrt(unsigned __int128 v) {
  if (v < 2) return v;
  // The long double seed is within a few units of the root; the root of any
  // 128-bit value fits in 64 bits. Comparisons divide instead of squaring so
  // nothing overflows near 2^128.
  constexpr unsigned __int128 kMaxRoot = UINT64_MAX;
  auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(v)));
  r = std::clamp<unsigned __int128>(r, 1, kMaxRoot);
  while (r > v / r) --r;
  while (r < kMaxRoot && r + 1 <= v / (r + 1)) ++r;
  return r;
}

uint64_t floor_phi(uint64_t n) {
  if (n > kFloorPhiMax) throw OverflowError("floor_phi argument too large for exact evaluation");
  const unsigned __int128 wide = n;
  const unsigned __int128 root = isqrt(5 * wide * wide);
  return static_cast<uint64_t>((wide + root) / 2);
}

uint64_t floor_phi2(uint64_t n) {
  const uint64_t a = floor_phi(n);
  if (a > UINT64_MAX - n) throw OverflowError("floor_phi2 result exceeds 64 bits");
  return a + n;
}

std::string to_string(CandidateId id) { return "R" + std::to_string(static_cast<int>(id)); }

CandidateId candidate_for_k(uint32_t k) {
  if (k < 1 || k > 3) throw std::invalid_argument("closed forms exist only for k = 1, 2, 3");
  return static_cast<CandidateId>(k);
}

namespace {

bool in_r1(Coord a, Coord b) {
  if (a < 0) return false;
  const Coord m = b - a;
  return static_cast<uint64_t>(a) == floor_phi(static_cast<uint64_t>(m));
}

// {a, 2a+1}
bool odd_line(Coord a, Coord b) { return b == 2 * a + 1; }

}  // namespace

bool member(CandidateId id, Position p) {
  if (p.x < 0 || p.y < 0) return false;
  const auto [a, b] = p.normalized();
  switch (id) {
    case CandidateId::kR1:
      return in_r1(a, b);
    case CandidateId::kR2:
      if (a == 0 && b == 0) return true;
      if (odd_line(a, b)) return true;
      return a >= 2 && a % 2 == 0 && b % 2 == 0 && in_r1((a - 2) / 2, (b - 2) / 2);
    case CandidateId::kR3:
      return (a == 0 && b == 0) || odd_line(a, b) || b == 2 * a + 2;
  }
  return false;
}

bool CandidateSet::contains(Position p) const { return member(id_, p); }

std::vector<Position> CandidateSet::enumerate(Coord bound) const {
  std::vector<Position> out;
  if (bound <= 0) return out;
  auto add = [&](Coord a, Coord b) {
    if (a < bound && b < bound) out.push_back(Position{a, b}.normalized());
  };
  auto wythoff_pairs = [&](const std::function<void(Coord, Coord)>& emit) {
    for (uint64_t m = 0;; ++m) {
      const auto a = static_cast<Coord>(floor_phi(m));
      if (a >= bound) break;
      emit(a, a + static_cast<Coord>(m));
    }
  };
  switch (id_) {
    case CandidateId::kR1:
      wythoff_pairs(add);
      break;
    case CandidateId::kR2:
      add(0, 0);
      for (Coord a = 0; 2 * a + 1 < bound; ++a) add(a, 2 * a + 1);
      wythoff_pairs([&](Coord a, Coord b) { add(2 * a + 2, 2 * b + 2); });
      break;
    case CandidateId::kR3:
      add(0, 0);
      for (Coord a = 0; 2 * a + 1 < bound; ++a) {
        add(a, 2 * a + 1);
        add(a, 2 * a + 2);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OptionCounts count_fvhd(Position p, const CandidateSet& set) {
  OptionCounts c;
  for (Coord z = 0; z < p.y; ++z) c.v += set.contains({p.x, z});
  for (Coord w = 0; w < p.x; ++w) c.h += set.contains({w, p.y});
  for (Coord i = 1; i <= std::min(p.x, p.y); ++i) c.d += set.contains({p.x - i, p.y - i});
  return c;
}

bool CaseReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed || !c.gating; });
}

namespace {

void record(CaseResult& r, Position p, const OptionCounts& c, bool ok) {
  ++r.instances;
  if (!ok && r.passed) {
    r.passed = false;
    r.counterexample = p;
    r.counterexample_counts = c;
  }
}

}  // namespace

CaseReport check_theorem1_cases(Coord bound) {
  if (bound < 3) throw std::invalid_argument("bound must be >= 3");
  const CandidateSet r2(CandidateId::kR2);
  const CandidateSet r3(CandidateId::kR3);

  std::vector<CaseResult> cases;
  cases.reserve(12);
  auto make = [&](std::string name, std::string claim, bool gating = true) -> size_t {
    CaseResult r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.gating = gating;
    cases.push_back(std::move(r));
    return cases.size() - 1;
  };
  const size_t base = make("W2 base", "f(0,0)=0, f(0,1)=1, f(0,x)>=2 for x>=2, f(1,1)=3, f(1,2)=2, f(2,2)=1");
  const size_t case1 = make("W2 case 1", "y = 2x+1, x >= 1: h = 0, d = 0, v = 1");
  const size_t case2 = make("W2 case 2", "(2 floor(phi n)+2, 2 floor(phi^2 n)+2): d = 1, v = h = 0");
  const size_t case3 = make("W2 case 3", "y > 2x+1: v = 2, h = 0, d = 0");
  const size_t case4 = make("W2 case 4", "0 < x <= y < 2x+1, not in R2: d = 1 and h+v >= 1, or d = 2");
  const size_t thm2 = make("W2 characterization", "member of R2 iff f(R2) <= 1");
  // The stated bound v <= d+1 fails on every {x, 2x+2} (v = 2, d = 0); the
  // property the characterization needs is v + d <= 2.
  const size_t w3_in = make("W3 members", "in R3: d <= 1, h = 0, v + d <= 2");
  const size_t w3_in_literal = make("W3 members (literal)", "in R3: d <= 1, h = 0, v <= d+1", false);
  const size_t w3_high = make("W3 high", "not in R3, y > 2x+2: v = 3");
  const size_t w3_low = make("W3 low", "not in R3, y < 2x+1: h = v = 1, d >= 1");
  const size_t thm3 = make("W3 characterization", "member of R3 iff f(R3) <= 2");

  for (Coord x = 0; x < bound; ++x) {
    for (Coord y = x; y < bound; ++y) {
      const Position p{x, y};
      const OptionCounts c2 = count_fvhd(p, r2);
      const bool in2 = r2.contains(p);

      if (x == 0 || (x == 1 && y <= 2) || (x == 2 && y == 2)) {
        bool ok = true;
        if (x == 0 && y == 0) ok = c2.f() == 0;
        else if (x == 0 && y == 1) ok = c2.f() == 1;
        else if (x == 0) ok = c2.f() >= 2;
        else if (x == 1 && y == 1) ok = c2.f() == 3;
        else if (x == 1 && y == 2) ok = c2.f() == 2;
        else ok = c2.f() == 1;
        record(cases[base], p, c2, ok);
      }
      if (x >= 1 && y == 2 * x + 1)
        record(cases[case1], p, c2, c2.h == 0 && c2.d == 0 && c2.v == 1);
      if (in2 && x >= 2 && x % 2 == 0 && y - x >= 0 && (y - x) % 2 == 0 &&
          member(CandidateId::kR1, {(x - 2) / 2, (y - 2) / 2}))
        record(cases[case2], p, c2, c2.d == 1 && c2.v == 0 && c2.h == 0);
      if (y > 2 * x + 1)
        record(cases[case3], p, c2, c2.v == 2 && c2.h == 0 && c2.d == 0);
      if (x > 0 && y < 2 * x + 1 && !in2)
        record(cases[case4], p, c2, (c2.d == 1 && c2.h + c2.v >= 1) || c2.d == 2);
      record(cases[thm2], p, c2, in2 == (c2.f() <= 1));

      const OptionCounts c3 = count_fvhd(p, r3);
      const bool in3 = r3.contains(p);
      if (in3) {
        record(cases[w3_in], p, c3, c3.d <= 1 && c3.h == 0 && c3.v + c3.d <= 2);
        record(cases[w3_in_literal], p, c3, c3.d <= 1 && c3.h == 0 && c3.v <= c3.d + 1);
      } else if (y > 2 * x + 2)
        record(cases[w3_high], p, c3, c3.v == 3);
      else if (y < 2 * x + 1)
        record(cases[w3_low], p, c3, c3.h == 1 && c3.v == 1 && c3.d >= 1);
      record(cases[thm3], p, c3, in3 == (c3.f() <= 2));
    }
  }
  return {bound, std::move(cases)};
}

}  // namespace bwn
