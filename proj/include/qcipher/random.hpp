// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_RANDOM_HPP
#define QCIPHER_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace qcipher {

// Seeded generator with portable bounded draws. std::uniform_int_distribution
// and std::shuffle differ between standard libraries; key files and golden
// vectors must not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcipher

#endif  // QCIPHER_RANDOM_HPP
