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

#include "bwn/grid_cache.hpp"

#include "bwn/comply.hpp"
#include "bwn/solver.hpp"

namespace bwn {

PGrid solve_any(const BlockingSpec& spec, uint32_t n) {
  if (spec.flavor == Flavor::kComply) return solve_comply({spec.mode, spec.k}, n);
  return solve_grid(spec, n);
}

std::shared_ptr<const PGrid> GridCache::get(const BlockingSpec& spec, uint32_t n) {
  spec.validate();
  const Key key{mode_byte(spec), spec.k, n};
  std::lock_guard lock(mu_);
  if (auto it = entries_.find(key); it != entries_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second.lru);
    return it->second.grid;
  }
  if (n == 0 || n > kMaxBoardSide) throw CapacityError("board side out of range");
  const uint64_t need = payload_bytes(n);
  if (need > capacity_)
    throw CapacityError("grid of side " + std::to_string(n) + " needs " + std::to_string(need) +
                        " bytes, cache cap is " + std::to_string(capacity_));
  while (bytes_ + need > capacity_ && !lru_.empty()) {
    const Key victim = lru_.back();
    lru_.pop_back();
    bytes_ -= payload_bytes(std::get<2>(victim));
    entries_.erase(victim);
  }
  auto grid = std::make_shared<const PGrid>(solve_any(spec, n));
  lru_.push_front(key);
  entries_.emplace(key, Entry{grid, lru_.begin()});
  bytes_ += need;
  return grid;
}

uint64_t GridCache::bytes_in_use() const {
  std::lock_guard lock(mu_);
  return bytes_;
}

size_t GridCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace bwn
