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

#include "bwn/grid.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

namespace bwn {
namespace {

constexpr std::array<char, 4> kMagic = {'B', 'W', 'N', 'G'};
constexpr uint8_t kVersion = 0x01;

void put_u32(std::ostream& out, uint32_t v) {
  const std::array<char, 4> b = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                                 static_cast<char>((v >> 16) & 0xff),
                                 static_cast<char>((v >> 24) & 0xff)};
  out.write(b.data(), b.size());
}

uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
    throw FormatError("truncated grid header");
  return uint32_t{b[0]} | (uint32_t{b[1]} << 8) | (uint32_t{b[2]} << 16) | (uint32_t{b[3]} << 24);
}

}  // namespace

PGrid::PGrid(BlockingSpec spec, uint32_t n) : spec_(spec), n_(n) {
  spec_.validate();
  if (n == 0) throw CapacityError("board side must be >= 1");
  if (n > kMaxBoardSide)
    throw CapacityError("board side " + std::to_string(n) + " exceeds the bit store limit of " +
                        std::to_string(kMaxBoardSide));
  words_.assign((cell_count() + 63) / 64, 0);
}

Value PGrid::at(Position p) const {
  if (!contains(p)) throw std::out_of_range("position outside the board");
  return value(p);
}

uint64_t PGrid::count_p() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
  return total;
}

std::vector<uint8_t> PGrid::payload() const {
  std::vector<uint8_t> bytes(payload_bytes(n_));
  for (size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<uint8_t>(words_[i >> 3] >> (8 * (i & 7)));
  return bytes;
}

uint8_t mode_byte(const BlockingSpec& spec) {
  return static_cast<uint8_t>(static_cast<uint8_t>(spec.mode) +
                              (spec.flavor == Flavor::kComply ? 3 : 0));
}

BlockingSpec spec_from_mode_byte(uint8_t byte, uint32_t k) {
  if (byte > 5) throw FormatError("invalid mode byte " + std::to_string(byte));
  return {static_cast<Mode>(byte % 3), byte >= 3 ? Flavor::kComply : Flavor::kBlocking, k};
}

PGrid grid_from_payload(BlockingSpec spec, uint32_t n, std::span<const uint8_t> payload) {
  PGrid grid(spec, n);
  if (payload.size() != payload_bytes(n))
    throw FormatError("payload has " + std::to_string(payload.size()) + " bytes, expected " +
                      std::to_string(payload_bytes(n)));
  auto words = grid.words();
  for (size_t i = 0; i < payload.size(); ++i)
    words[i >> 3] |= uint64_t{payload[i]} << (8 * (i & 7));
  // Padding bits past n*n must stay clear so equality stays cellwise.
  const uint64_t cells = grid.cell_count();
  if (cells % 64 != 0) words.back() &= (uint64_t{1} << (cells % 64)) - 1;
  return grid;
}

void write_grid(std::ostream& out, const PGrid& grid) {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kVersion));
  out.put(static_cast<char>(mode_byte(grid.spec())));
  put_u32(out, grid.spec().k);
  put_u32(out, grid.n());
  const auto bytes = grid.payload();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("failed writing grid");
}

PGrid read_grid(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw FormatError("missing BWNG magic");
  const int version = in.get();
  if (version != kVersion) throw FormatError("unsupported grid version");
  const int mode = in.get();
  if (mode == std::char_traits<char>::eof()) throw FormatError("truncated grid header");
  const uint32_t k = get_u32(in);
  const uint32_t n = get_u32(in);
  const BlockingSpec spec = spec_from_mode_byte(static_cast<uint8_t>(mode), k);
  if (k == 0) throw FormatError("k must be >= 1");
  if (n == 0 || n > kMaxBoardSide) throw FormatError("board side out of range");
  std::vector<uint8_t> bytes(payload_bytes(n));
  if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())))
    throw FormatError("truncated grid payload");
  return grid_from_payload(spec, n, bytes);
}

void save_grid(const std::string& path, const PGrid& grid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_grid(out, grid);
}

PGrid load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return read_grid(in);
}

}  // namespace bwn
