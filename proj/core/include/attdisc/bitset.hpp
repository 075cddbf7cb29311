// Copyright 2026 The attdisc Authors
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace attdisc {

/**
 * Dynamic bitset sized at construction. Provides only the operations the
 * solvers actually use; indices start at 0.
 */
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(int size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~0ull;
    b.trim();
    return b;
  }

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // popcount of the intersection, without allocating
  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
  }

  bool operator==(const Bitset&) const = default;

  /// First set bit at or after `from`, or -1 when there is none.
  int next(int from = 0) const {
    if (from >= size_ || size_ == 0) return -1;
    int w = from >> 6;
    uint64_t cur = words_[w] & (~0ull << (from & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w == static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t cur = words_[w];
      while (cur) {
        fn(static_cast<int>((w << 6) + std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= ~0ull >> (64 - (size_ & 63));
  }

  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace attdisc
