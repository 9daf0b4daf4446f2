// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_MORPHISMS_HPP
#define QCIPHER_MORPHISMS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcipher/permutation.hpp"
#include "qcipher/quasigroup.hpp"

namespace qcipher {

/// (A, B, C) read as xA o yB = (x*y)C.
struct IsotopismTriple {
  Permutation a;
  Permutation b;
  Permutation c;

  IsotopismTriple inverse() const {
    return {a.inverse(), b.inverse(), c.inverse()};
  }
  friend bool operator==(const IsotopismTriple &,
                         const IsotopismTriple &) = default;
};

struct AutGroup {
  /// Lexicographic by one-line notation; always contains the identity.
  std::vector<Permutation> elements;
  /// Whether members were required to stabilize a designated sub.
  bool smarandache = false;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Permutation &p) const;
  bool is_trivial() const noexcept { return elements.size() <= 1; }
  /// Contains the identity and is closed under composition and inversion.
  bool is_group() const;
};

inline constexpr std::size_t kAutomorphismSearchCap = 32;

bool is_automorphism(const Quasigroup &q, const Permutation &p);

/// Throws Errc::limit_exceeded above `max_order`.
AutGroup automorphism_group(const Quasigroup &q,
                            std::size_t max_order = kAutomorphismSearchCap);

/// Automorphisms mapping the designated sub onto itself.
AutGroup smarandache_automorphism_group(
    const SQuasigroup &sq, std::size_t max_order = kAutomorphismSearchCap);

/// A(x)*B(y) = C(x*y) for all x, y; with `sub`, also requires each
/// component to map sub onto sub.
bool is_autotopism(const Quasigroup &q, const IsotopismTriple &t,
                   std::optional<std::span<const Element>> sub = std::nullopt);

/// True iff xA (x) yB = (x (+) y)C with (+) from u and (x) from v, and each
/// of A, B, C maps u.sub onto v.sub.
bool is_s_isotopism(const SQuasigroup &u, const SQuasigroup &v,
                    const IsotopismTriple &t);

/// x.delta (x) y.gamma == (x.beta (+) y).delta for every pair.
bool check_transfer_identity(const Quasigroup &u, const Quasigroup &v,
                             const Permutation &beta, const Permutation &delta,
                             const Permutation &gamma);

/// {psi^-1 a psi : a in g}, sorted.
AutGroup conjugate_group(const AutGroup &g, const Permutation &psi);

}  // namespace qcipher

#endif  // QCIPHER_MORPHISMS_HPP
