// Copyright 2026 The ferm authors
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

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace ferm {

/// A fixed-length bit vector over 64-bit words. Length is set at
/// construction; all binary operations require equal lengths.
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= uint64_t(1) << (i & 63);
    else
      w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r(a.n_);
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
  }
  friend Bits operator|(const Bits& a, const Bits& b) {
    Bits r(a.n_);
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = a.w_[i] | b.w_[i];
    return r;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit; size() when empty.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    // Lexicographic with bit 0 most significant.
    for (std::size_t i = 0; i < a.n_; ++i) {
      bool x = a.get(i), y = b.get(i);
      if (x != y) return x ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t n_;
  std::vector<uint64_t> w_;
};

}  // namespace ferm
