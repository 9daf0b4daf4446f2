// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_CONSTRUCTIONS_HPP
#define QCIPHER_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qcipher/morphisms.hpp"
#include "qcipher/quasigroup.hpp"

namespace qcipher {

/// (Z_n, +).
Quasigroup cyclic_group(std::uint32_t n);

// Exponents of a cross-inverse quasigroup a o b = a^r b^s over an abelian
// group of order n. Requires r*s == 1 (mod n) with r, s reduced and nonzero.
struct KeedwellParams {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;

  /// Throws Errc::invalid_argument when the constraints fail.
  static KeedwellParams make(std::uint32_t n, std::uint32_t r, std::uint32_t s);

  /// r + s != 0 (mod n). Otherwise x o x is constant (unipotent).
  bool recommended() const noexcept { return (r + s) % n != 0; }
  /// r = s = 1 reproduces the group itself.
  bool trivial() const noexcept { return r == 1 && s == 1; }
  /// Multiplier u with rho(a) = a^u, u = (-r)^3 mod n.
  std::uint32_t crossed_inverse_exponent() const noexcept;

  friend bool operator==(const KeedwellParams &,
                         const KeedwellParams &) = default;
};

/// x o y = r*x + s*y (mod n) on Z_n.
Quasigroup keedwell_cipq(const KeedwellParams &params);

/// x o y = x^r * y^s computed with the group's own table. `group` must be an
/// abelian group of order n.
Quasigroup keedwell_over_group(const Quasigroup &group, std::uint32_t r,
                               std::uint32_t s);

/// Build an order-2n quasigroup whose top-left n x n block is P and whose
/// designated sub is {0..n-1}.
///
/// Structured mode is the block table [[P, P+n], [P+n, P]] (isomorphic to
/// P x Z2). Strict mode fills the three other blocks with parastrophes of P
/// twisted by central automorphisms of P, chosen at random, and retries until
/// the whole table fails the cross inverse property. Every automorphism of P
/// extends to the result in both modes (acting the same way on both halves),
/// so the designated sub keeps a nontrivial Smarandache automorphism group
/// whenever P has one.
SQuasigroup embed_as_initial(const Quasigroup &p, std::uint64_t rng_seed,
                             bool strict_initial);

inline constexpr int kStrictEmbeddingAttempts = 64;

struct HolomorphTag {
  std::size_t base_order = 0;
  /// Ranked lexicographically; rank is the automorphism coordinate.
  std::vector<Permutation> automorphisms;

  std::size_t group_size() const noexcept { return automorphisms.size(); }
  std::size_t order() const noexcept { return base_order * group_size(); }
  Element flat(std::size_t rank, Element x) const {
    return Element(rank * base_order + x);
  }
  std::pair<std::size_t, Element> unflat(Element index) const {
    return {index / base_order, Element(index % base_order)};
  }
};

/// (a, x) o (b, y) = (ab, xb * y) over a group of automorphisms of L.
std::pair<Quasigroup, HolomorphTag> holomorph(const Quasigroup &l,
                                              std::vector<Permutation> group);

/// Holomorph over SAUM(sq), with sub = {(a, x) : x in sq.sub}.
std::pair<SQuasigroup, HolomorphTag> smarandache_holomorph(
    const SQuasigroup &sq, std::size_t max_order = kAutomorphismSearchCap);

/// q' with q'(A x, B y) = C(q(x, y)).
Quasigroup apply_isotopism(const Quasigroup &q, const IsotopismTriple &t);

struct SIsotope {
  SQuasigroup v;
  /// Carries U onto V: (beta^-1 delta, gamma, delta).
  IsotopismTriple forward;
};

/// (delta^-1 beta, gamma^-1, delta^-1), postfix composition.
IsotopismTriple v_to_u_triple(const Permutation &beta,
                                    const Permutation &delta,
                                    const Permutation &gamma);

/// V such that v_to_u_triple(beta, delta, gamma) carries V onto U, which
/// is the orientation under which x.delta (x) y.gamma = (x.beta (+) y).delta.
/// Throws Errc::precondition when beta is not in SAUM(U) or delta / gamma do
/// not map the sub onto itself.
SIsotope build_V_from_U(const SQuasigroup &u, const Permutation &beta,
                        const Permutation &delta, const Permutation &gamma);

}  // namespace qcipher

#endif  // QCIPHER_CONSTRUCTIONS_HPP
