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

#include "ecqc/bitvec.hpp"

#include <bit>
#include <cctype>

#include "ecqc/error.hpp"

namespace ecqc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kWrongDegree: return "WrongDegree";
    case Errc::kEvenConstant: return "EvenConstant";
    case Errc::kSpecMismatch: return "SpecMismatch";
    case Errc::kZeroInverse: return "ZeroInverse";
    case Errc::kPointNotOnCurve: return "PointNotOnCurve";
    case Errc::kZeroScale: return "ZeroScale";
    case Errc::kInvalidProjective: return "InvalidProjective";
    case Errc::kCompletenessViolation: return "CompletenessViolation";
    case Errc::kSampleExhausted: return "SampleExhausted";
    case Errc::kWireCollision: return "WireCollision";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kZeroConstant: return "ZeroConstant";
    case Errc::kDegreeTooSmall: return "DegreeTooSmall";
    case Errc::kInvalidCurve: return "InvalidCurve";
    case Errc::kParse: return "Parse";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BitVec BitVec::from_u64(std::size_t nbits, std::uint64_t value) {
  BitVec v(nbits);
  if (!v.words_.empty()) {
    v.words_[0] = nbits >= 64 ? value : (value & ((std::uint64_t{1} << nbits) - 1));
  }
  return v;
}

BitVec BitVec::from_hex(std::size_t nbits, std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw Error(Errc::kParse, "empty hex string");
  BitVec v(nbits);
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const int c = std::tolower(static_cast<unsigned char>(*it));
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else {
      throw Error(Errc::kParse, "bad hex digit in '" + std::string(text) + "'");
    }
    for (int k = 0; k < 4; ++k) {
      if (!((d >> k) & 1)) continue;
      if (bit + k >= nbits) {
        throw Error(Errc::kParse,
                    "hex value '" + std::string(text) + "' exceeds " +
                        std::to_string(nbits) + " bits");
      }
      v.set(bit + k, true);
    }
  }
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw Error(Errc::kParse, "bad bit character");
    }
  }
  return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.nbits_ != nbits_) throw Error(Errc::kSpecMismatch, "bit length differs");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.nbits_ != nbits_) throw Error(Errc::kSpecMismatch, "bit length differs");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVec::is_zero() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

long BitVec::highest_bit() const noexcept {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i]) return static_cast<long>(i * 64 + 63 - std::countl_zero(words_[i]));
  }
  return -1;
}

BitVec BitVec::shifted_up(std::size_t k) const {
  BitVec out(nbits_);
  const std::size_t ws = k / 64, bs = k % 64;
  for (std::size_t i = words_.size(); i-- > ws;) {
    std::uint64_t w = words_[i - ws] << bs;
    if (bs && i - ws > 0) w |= words_[i - ws - 1] >> (64 - bs);
    out.words_[i] = w;
  }
  if (nbits_ % 64 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }
  return out;
}

BitVec BitVec::resized(std::size_t nbits) const {
  BitVec out(nbits);
  for (std::size_t i = 0; i < out.words_.size() && i < words_.size(); ++i) {
    out.words_[i] = words_[i];
  }
  if (nbits % 64 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (nbits % 64)) - 1;
  }
  return out;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::size_t bit = 0; bit < nbits_; bit += 4) {
    int d = 0;
    for (int k = 0; k < 4 && bit + k < nbits_; ++k) d |= get(bit + k) << k;
    s.push_back(kDigits[d]);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (s.empty()) s = "0";
  return "0x" + std::string(s.rbegin(), s.rend());
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace ecqc
