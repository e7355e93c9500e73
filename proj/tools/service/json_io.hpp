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

// JSON and base64 encodings shared by the CLI and the game service.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bwn/analysis.hpp"
#include "bwn/closedforms.hpp"
#include "bwn/comply.hpp"
#include "bwn/covers.hpp"
#include "bwn/game.hpp"
#include "bwn/rules.hpp"

namespace bwn::service {

using nlohmann::json;

std::string base64_encode(std::span<const uint8_t> bytes);
// Throws std::invalid_argument on malformed input.
std::vector<uint8_t> base64_decode(std::string_view text);

json position_json(Position p);
json positions_json(const std::vector<Position>& ps);
// Accepts [x, y]; throws GameError("bad_request") otherwise.
Position parse_position(const json& j);
std::vector<Position> parse_positions(const json& j);

json to_json(const GameState& state);
json to_json(const SplitEstimate& est);
json to_json(const PropReport& report);
json to_json(const CaseReport& report);
json to_json(const CoverReport& report, size_t max_violations = 20);
json to_json(const DualityResult& result);
json to_json(const OptionCounts& c);

}  // namespace bwn::service
