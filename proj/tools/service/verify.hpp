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

// Batch verification reports behind `bwn verify ...`. Each report is a JSON
// object with a top-level boolean "passed".

#include <cstdint>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace bwn::service {

struct VerifyOptions {
  std::optional<uint32_t> k = std::nullopt;  // default: the check's standard k range
  std::optional<uint32_t> n = std::nullopt;
  std::optional<int64_t> bound = std::nullopt;
};

json verify_theorem1(const VerifyOptions& opt);  // k in 1..3, n = 4096
json verify_prop2(const VerifyOptions& opt);     // k in 1..10, n = 2048
json verify_terminal(const VerifyOptions& opt);  // k in 1..50
json verify_duality(const VerifyOptions& opt);   // all modes, k in 1..6, n = 512
json verify_covers(const VerifyOptions& opt);    // range up to 10^6
json verify_cases(const VerifyOptions& opt);     // bound = 200

// Dispatches on theorem1|prop2|terminal|duality|covers|cases; throws
// std::invalid_argument for anything else.
json run_verify(const std::string& what, const VerifyOptions& opt);

}  // namespace bwn::service
