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

#include "json_io.hpp"

#include <array>
#include <stdexcept>

namespace bwn::service {
namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int sextet(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

}  // namespace

std::string base64_encode(std::span<const uint8_t> bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const uint32_t v = (uint32_t{bytes[i]} << 16) | (uint32_t{bytes[i + 1]} << 8) | bytes[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  if (const size_t rest = bytes.size() - i; rest > 0) {
    uint32_t v = uint32_t{bytes[i]} << 16;
    if (rest == 2) v |= uint32_t{bytes[i + 1]} << 8;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += rest == 2 ? kAlphabet[(v >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::vector<uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw std::invalid_argument("base64 length is not a multiple of 4");
  std::vector<uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    std::array<int, 4> s{};
    int pad = 0;
    for (int j = 0; j < 4; ++j) {
      const char c = text[i + j];
      if (c == '=' && i + 4 == text.size() && j >= 2) {
        s[j] = 0;
        ++pad;
        continue;
      }
      if (pad > 0 || (s[j] = sextet(c)) < 0) throw std::invalid_argument("invalid base64 input");
    }
    const uint32_t v = (uint32_t(s[0]) << 18) | (uint32_t(s[1]) << 12) | (uint32_t(s[2]) << 6) | uint32_t(s[3]);
    out.push_back(static_cast<uint8_t>(v >> 16));
    if (pad < 2) out.push_back(static_cast<uint8_t>(v >> 8));
    if (pad < 1) out.push_back(static_cast<uint8_t>(v));
  }
  return out;
}

json position_json(Position p) { return json::array({p.x, p.y}); }

json positions_json(const std::vector<Position>& ps) {
  json out = json::array();
  for (const Position& p : ps) out.push_back(position_json(p));
  return out;
}

Position parse_position(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw GameError("bad_request", "positions are [x, y] integer pairs");
  return {j[0].get<Coord>(), j[1].get<Coord>()};
}

std::vector<Position> parse_positions(const json& j) {
  if (!j.is_array()) throw GameError("bad_request", "expected an array of [x, y] pairs");
  std::vector<Position> out;
  for (const json& e : j) out.push_back(parse_position(e));
  return out;
}

json to_json(const GameState& s) {
  json history = json::array();
  for (const TurnRecord& t : s.history) {
    history.push_back({{"mover", to_string(t.mover)},
                       {"blocks", positions_json(t.blocks)},
                       {"move", t.move ? position_json(*t.move) : json(nullptr)}});
  }
  const bool moving = !s.over() && s.phase == Phase::kAwaitMove;
  return {{"id", s.id},
          {"mode", to_string(s.spec.mode)},
          {"k", s.spec.k},
          {"n", s.n},
          {"position", position_json(s.position)},
          {"phase", to_string(s.phase)},
          {"blocker", to_string(s.blocker)},
          {"mover", to_string(s.mover())},
          {"block_budget", s.block_budget()},
          {"blocked", positions_json(s.blocked)},
          {"blockable", s.over() ? json::array() : positions_json(s.blockable_options())},
          {"legal_moves", moving ? positions_json(s.legal_moves()) : json::array()},
          {"status", to_string(s.status)},
          {"history", history}};
}

json to_json(const SplitEstimate& est) {
  json clusters = json::array();
  for (const Cluster& c : est.clusters) clusters.push_back({{"center", c.center}, {"weight", c.weight}});
  return {{"k", est.k},
          {"n", est.n},
          {"tail_fraction", est.tail_fraction},
          {"gap", est.gap},
          {"samples", est.samples},
          {"clusters", clusters},
          {"alpha_hat", est.alpha_hat ? json(*est.alpha_hat) : json(nullptr)},
          {"beta_hat", est.beta_hat ? json(*est.beta_hat) : json(nullptr)}};
}

json to_json(const PropReport& r) {
  json diffs = json::array();
  for (const auto& v : r.difference_violations) diffs.push_back({{"d", v.d}, {"count", v.count}});
  return {{"k", r.k},
          {"n", r.n},
          {"passed", r.passed()},
          {"column0_count", r.column0_count},
          {"column0_is_initial_segment", r.column0_is_initial_segment},
          {"column_counts_ok_through", r.column_counts_ok_through},
          {"overfull_columns", r.overfull_columns},
          {"difference_violations", diffs},
          {"max_difference_multiplicity", r.max_difference_multiplicity},
          {"cells_in_verified_columns", r.cells_in_verified_columns},
          {"literal_prefix_formula", r.literal_prefix_formula}};
}

json to_json(const OptionCounts& c) {
  return {{"v", c.v}, {"h", c.h}, {"d", c.d}, {"f", c.f()}};
}

json to_json(const CaseReport& r) {
  json cases = json::array();
  for (const CaseResult& c : r.cases) {
    json e = {{"name", c.name}, {"claim", c.claim}, {"instances", c.instances}, {"passed", c.passed},
              {"gating", c.gating}};
    if (c.counterexample) {
      e["counterexample"] = position_json(*c.counterexample);
      e["counts"] = to_json(c.counterexample_counts);
    }
    cases.push_back(e);
  }
  return {{"bound", r.bound}, {"passed", r.passed()}, {"cases", cases}};
}

json to_json(const CoverReport& r, size_t max_violations) {
  json v = json::array();
  for (size_t i = 0; i < r.violations.size() && i < max_violations; ++i)
    v.push_back({{"x", r.violations[i].x}, {"observed", r.violations[i].observed}});
  return {{"p", r.p},
          {"range", {r.lo, r.hi}},
          {"exact", r.exact()},
          {"violation_count", r.violations.size()},
          {"violations", v}};
}

json to_json(const DualityResult& r) {
  return {{"holds", r.holds},
          {"cells_checked", r.cells_checked},
          {"first_mismatch", r.first_mismatch ? position_json(*r.first_mismatch) : json(nullptr)}};
}

}  // namespace bwn::service
