// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_PERMUTATION_HPP
#define QCIPHER_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcipher/types.hpp"

namespace qcipher {

// Bijection on 0..m-1 in one-line notation: images()[x] is the image of x.
//
// Composition is postfix (left to right): p.then(q) applies p first, then q.
// This is the x(pq) = (xp)q reading used throughout, so a product written
// "d^-1 b" means "apply d^-1, then b".
class Permutation {
 public:
  Permutation() = default;

  /// Throws Errc::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t size);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator[](Element x) const { return images_[x]; }
  Element apply(Element x) const;
  std::span<const Element> images() const noexcept { return images_; }

  Permutation then(const Permutation &next) const;
  Permutation inverse() const;
  /// psi^-1 * this * psi (postfix): x -> psi(this(psi^-1(x))).
  Permutation conjugated_by(const Permutation &psi) const;

  bool is_identity() const noexcept;
  /// True iff the permutation maps `set` onto itself.
  bool stabilizes(std::span<const Element> set) const;
  /// Smallest k >= 1 with p^k = id.
  std::size_t order() const;

  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Element> images_;
};

enum class PermOp { compose, invert, conjugate };

/// One entry point for the three permutation primitives. `q` is the second
/// factor for compose and the conjugator psi for conjugate; it is ignored for
/// invert.
Permutation perm_algebra(PermOp op, const Permutation &p,
                         const Permutation *q = nullptr);

}  // namespace qcipher

#endif  // QCIPHER_PERMUTATION_HPP
