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

#include <algorithm>

namespace bwn {

std::ostream& operator<<(std::ostream& out, const Position& p) {
  return out << '(' << p.x << ',' << p.y << ')';
}

std::string_view to_string(MoveClass c) {
  switch (c) {
    case MoveClass::kVertical:
      return "v";
    case MoveClass::kHorizontal:
      return "h";
    case MoveClass::kDiagonal:
      return "d";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kAll:
      return "all";
    case Mode::kDiagOnly:
      return "diag";
    case Mode::kNimOnly:
      return "nim";
  }
  return "?";
}

std::string_view to_string(Flavor f) {
  return f == Flavor::kBlocking ? "blocking" : "comply";
}

Mode parse_mode(std::string_view s) {
  if (s == "all") return Mode::kAll;
  if (s == "diag") return Mode::kDiagOnly;
  if (s == "nim") return Mode::kNimOnly;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected all|diag|nim)");
}

Flavor parse_flavor(std::string_view s) {
  if (s == "blocking") return Flavor::kBlocking;
  if (s == "comply") return Flavor::kComply;
  throw std::invalid_argument("unknown flavor '" + std::string(s) + "' (expected blocking|comply)");
}

void BlockingSpec::validate() const {
  if (k < 1) throw std::invalid_argument("blocking parameter k must be >= 1");
}

std::ostream& operator<<(std::ostream& out, const BlockingSpec& spec) {
  return out << to_string(spec.flavor) << '/' << to_string(spec.mode) << "/k=" << spec.k;
}

std::vector<Move> options(Position p) {
  std::vector<Move> out;
  out.reserve(static_cast<size_t>(option_count(p)));
  for (Coord j = p.y; j >= 1; --j) out.push_back({{p.x, p.y - j}, MoveClass::kVertical});
  for (Coord i = p.x; i >= 1; --i) out.push_back({{p.x - i, p.y}, MoveClass::kHorizontal});
  for (Coord i = std::min(p.x, p.y); i >= 1; --i)
    out.push_back({{p.x - i, p.y - i}, MoveClass::kDiagonal});
  return out;
}

bool is_option(Position from, Position to) {
  if (to.x < 0 || to.y < 0) return false;
  const Coord i = from.x - to.x;
  const Coord j = from.y - to.y;
  if (i == 0) return j > 0;
  if (j == 0) return i > 0;
  return i > 0 && i == j;
}

MoveClass classify_move(Position from, Position to) {
  if (!is_option(from, to)) throw std::invalid_argument("not a Wythoff Nim option");
  if (from.x == to.x) return MoveClass::kVertical;
  if (from.y == to.y) return MoveClass::kHorizontal;
  return MoveClass::kDiagonal;
}

bool is_terminal(uint32_t k, Position p) {
  if (p.x < 0 || p.y < 0) return false;
  const Position q = p.normalized();
  return q.y < static_cast<Coord>(k) - 2 * q.x;
}

TerminalSet terminal_set(uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  TerminalSet t{k, {}};
  const Coord bound = k;
  for (Coord x = 0; 3 * x < bound; ++x) {
    for (Coord y = x; y < bound - 2 * x; ++y) {
      t.cells.insert({x, y});
      t.cells.insert({y, x});
    }
  }
  return t;
}

uint64_t terminal_count(uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  // k = 3m+1, 3m+2 or 3(m+1); in every case m+1 = ceil(k/3).
  const uint64_t m1 = (static_cast<uint64_t>(k) + 2) / 3;
  switch (k % 3) {
    case 1:
      return 3 * m1 * m1 - 2 * m1;
    case 2:
      return 3 * m1 * m1;
    default:
      return 3 * m1 * m1 + 2 * m1;
  }
}

}  // namespace bwn
