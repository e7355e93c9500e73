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

// Exact-integer Beatty machinery, the candidate sets R1/R2/R3 and the
// per-class option counts used to check the k = 2, 3 characterizations.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwn/rules.hpp"
#include "bwn/solver.hpp"

namespace bwn {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// floor(sqrt(v)) for 128-bit unsigned v.
unsigned __int128 isqrt(unsigned __int128 v);

// Largest argument floor_phi accepts: 5 n^2 must fit in 128 bits.
inline constexpr uint64_t kFloorPhiMax = 8'249'634'742'471'189'717ULL;

// floor(phi * n) = floor((n + isqrt(5 n^2)) / 2), exact. Throws OverflowError
// past kFloorPhiMax.
uint64_t floor_phi(uint64_t n);
// floor(phi^2 * n) = n + floor(phi * n).
uint64_t floor_phi2(uint64_t n);

enum class CandidateId : uint8_t { kR1 = 1, kR2 = 2, kR3 = 3 };

std::string to_string(CandidateId id);

// The R_k set for k = 1, 2, 3; throws std::invalid_argument otherwise.
CandidateId candidate_for_k(uint32_t k);

// Membership predicate plus ordered enumerator for one candidate set.
class CandidateSet {
 public:
  explicit CandidateSet(CandidateId id) : id_(id) {}

  CandidateId id() const { return id_; }

  bool contains(Position p) const;

  // Unordered members {a, b}, a <= b < bound, lexicographic.
  std::vector<Position> enumerate(Coord bound) const;

 private:
  CandidateId id_;
};

bool member(CandidateId id, Position p);

// Counts the members of `set` among the options of p, split by move class.
// The result uses the labels of `options()`, i.e. v lowers y and h lowers x.
// (In the displayed counting definitions the names v and h are attached to
// the opposite directions; the case analysis that uses them follows the move
// labels, so we do too.)
OptionCounts count_fvhd(Position p, const CandidateSet& set);

struct CaseResult {
  std::string name;
  std::string claim;
  uint64_t instances = 0;
  bool passed = true;
  std::optional<Position> counterexample;
  OptionCounts counterexample_counts;
  // Informational cases are reported but do not affect CaseReport::passed.
  bool gating = true;
};

struct CaseReport {
  Coord bound = 0;
  std::vector<CaseResult> cases;

  bool passed() const;
};

// Classifies every {x, y}, x <= y < bound, into the cases of the k = 2 and
// k = 3 arguments and checks each claimed per-class count. Throws
// std::invalid_argument if bound < 3.
CaseReport check_theorem1_cases(Coord bound);

}  // namespace bwn
