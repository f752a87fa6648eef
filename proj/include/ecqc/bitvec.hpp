// Copyright 2026 The ecqc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecqc {

// Fixed-length bit string packed into 64-bit words. Bit i lives in word i/64
// at position i%64; bits past size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64) {}

  // Low `nbits` bits of `value`.
  static BitVec from_u64(std::size_t nbits, std::uint64_t value);
  // Parses "0x1b", "1b" (hex, bit i of the integer is bit i). Throws
  // Error(kParse) on bad digits or when a set bit does not fit.
  static BitVec from_hex(std::size_t nbits, std::string_view text);
  // "101" means bit0=1, bit1=0, bit2=1.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const noexcept { return nbits_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  BitVec& operator&=(const BitVec& other);
  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  // Index of the highest set bit, or -1 when zero.
  long highest_bit() const noexcept;
  std::uint64_t low_u64() const noexcept { return words_.empty() ? 0 : words_[0]; }

  // Shifts toward higher indices; bits shifted past size() are dropped.
  BitVec shifted_up(std::size_t k) const;
  BitVec resized(std::size_t nbits) const;

  std::string to_hex() const;     // lowercase, "0x" prefix, no leading zeros
  std::string to_string() const;  // bit0 first

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& words() noexcept { return words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ecqc
