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

// Bit-packed n x n table of P/N values and its binary snapshot format.
//
// Snapshot layout (little-endian):
//   "BWNG"  magic, 4 bytes
//   0x01    version
//   mode    0..2 blocking all/diag/nim, 3..5 the comply counterparts
//   k       uint32
//   n       uint32
//   bits    ceil(n*n/8) bytes, row-major, bit 0 of byte 0 is cell (0,0), 1 = P

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwn/rules.hpp"

namespace bwn {

// Raised before allocating a board whose bit store would exceed the limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Value : uint8_t { kN = 0, kP = 1 };

inline constexpr uint32_t kMaxBoardSide = 65535;

class PGrid {
 public:
  // Throws CapacityError if n is 0 or n exceeds kMaxBoardSide.
  PGrid(BlockingSpec spec, uint32_t n);

  uint32_t n() const { return n_; }
  const BlockingSpec& spec() const { return spec_; }

  bool contains(Position p) const {
    return p.x >= 0 && p.y >= 0 && p.x < n_ && p.y < n_;
  }

  bool is_p(Coord x, Coord y) const {
    const uint64_t i = index(x, y);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  bool is_p(Position p) const { return is_p(p.x, p.y); }
  Value value(Position p) const { return is_p(p) ? Value::kP : Value::kN; }

  // Checked access; throws std::out_of_range outside the board.
  Value at(Position p) const;

  void set(Coord x, Coord y, bool p) {
    const uint64_t i = index(x, y);
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (p)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  // Grids are filled in row-major order, one 64-bit word at a time.
  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

  uint64_t cell_count() const { return uint64_t{n_} * n_; }
  uint64_t count_p() const;

  // Row-major packed bytes: the payload section of the snapshot format.
  std::vector<uint8_t> payload() const;

  friend bool operator==(const PGrid& a, const PGrid& b) {
    return a.spec_ == b.spec_ && a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  uint64_t index(Coord x, Coord y) const {
    return static_cast<uint64_t>(y) * n_ + static_cast<uint64_t>(x);
  }

  BlockingSpec spec_;
  uint32_t n_;
  std::vector<uint64_t> words_;
};

// Bytes of the bit store for a board of side n.
constexpr uint64_t payload_bytes(uint64_t n) { return (n * n + 7) / 8; }

uint8_t mode_byte(const BlockingSpec& spec);
BlockingSpec spec_from_mode_byte(uint8_t byte, uint32_t k);

void write_grid(std::ostream& out, const PGrid& grid);
PGrid read_grid(std::istream& in);

void save_grid(const std::string& path, const PGrid& grid);
PGrid load_grid(const std::string& path);

// Rebuilds a grid from a packed payload; throws FormatError on size mismatch.
PGrid grid_from_payload(BlockingSpec spec, uint32_t n, std::span<const uint8_t> payload);

}  // namespace bwn
