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

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "bwn/grid.hpp"

namespace bwn {

// Solved grids keyed by (flavor, mode, k, n), least-recently-used eviction
// once the payload bytes exceed the cap. Evicted grids stay alive for as long
// as a caller holds them. Thread-safe; a miss solves under the lock.
class GridCache {
 public:
  explicit GridCache(uint64_t capacity_bytes) : capacity_(capacity_bytes) {}

  // Throws CapacityError if this one grid alone exceeds the cap.
  std::shared_ptr<const PGrid> get(const BlockingSpec& spec, uint32_t n);

  uint64_t bytes_in_use() const;
  size_t size() const;
  uint64_t capacity_bytes() const { return capacity_; }

 private:
  using Key = std::tuple<uint8_t, uint32_t, uint32_t>;  // mode byte, k, n
  struct Entry {
    std::shared_ptr<const PGrid> grid;
    std::list<Key>::iterator lru;
  };

  uint64_t capacity_;
  mutable std::mutex mu_;
  std::map<Key, Entry> entries_;
  std::list<Key> lru_;  // front = most recent
  uint64_t bytes_ = 0;
};

// Solves a spec of either flavor.
PGrid solve_any(const BlockingSpec& spec, uint32_t n);

}  // namespace bwn
