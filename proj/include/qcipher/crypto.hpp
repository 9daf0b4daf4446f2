// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_CRYPTO_HPP
#define QCIPHER_CRYPTO_HPP

// Two-layer quasigroup cipher.
//
// Layer 1 multiplies each message element m_i (an element of the designated
// cross-inverse subquasigroup of U) on the left by a key element y_i, where
// y_1 = y0 and y_{i+1} = rho(y_i) walks the inverse cycle of y0. Because the
// sub is CIP, (y (+) m) (+) rho(y) = m recovers the message.
//
// Layer 2 sends each layer-1 output through the third component of the
// isotopism carrying U onto V, which is the element map turning (+)-products
// into (x)-products. Ciphertext elements therefore range over all of V.
//
// This is an educational construction. It provides no confidentiality,
// integrity or side-channel guarantees and must not protect real data.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcipher/constructions.hpp"
#include "qcipher/morphisms.hpp"
#include "qcipher/quasigroup.hpp"

namespace qcipher {

struct KeygenOptions {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint64_t seed = 0;
  bool strict_initial = true;
  /// Accept r + s = 0 (mod n). Off by default.
  bool allow_unipotent = false;
};

struct KeyMaterial {
  KeedwellParams params;
  SQuasigroup u;
  SQuasigroup v;
  /// Position in u.sub() -> element of the Keedwell table.
  Permutation phi;
  Permutation alpha;
  Permutation beta;
  Permutation psi;
  /// psi^-1 alpha psi.
  Permutation gamma;
  /// psi^-1 beta psi.
  Permutation delta;
  /// Carries U onto V; its third component is the layer-2 map.
  IsotopismTriple triple;
  /// Crossed inverse of the sub, extended by the identity off the sub.
  Permutation rho;
  Element y0 = 0;
  bool delta_in_saum_v = false;
  bool gamma_in_saum_v = false;

  std::size_t order() const noexcept { return u.q().order(); }
  std::size_t sub_size() const noexcept { return u.sub().size(); }
  /// Length of the inverse cycle through y0, i.e. the key-schedule period.
  std::size_t schedule_period() const;
};

inline constexpr int kKeygenEmbeddingAttempts = 8;
/// Key orders reach 2n; the default automorphism cap would stop at n = 16.
inline constexpr std::size_t kKeygenAutomorphismCap = 64;

KeyMaterial keygen(const KeygenOptions &options);

/// Rebuild the derived fields (V, rho, membership flags) from the stored key
/// parts and check every key invariant. Used by keygen and by file loading.
KeyMaterial assemble_key(KeedwellParams params, SQuasigroup u, Permutation phi,
                         Permutation alpha, Permutation beta, Permutation psi,
                         Permutation gamma, Permutation delta,
                         IsotopismTriple triple, Element y0);

struct CipherText {
  std::vector<Element> body;
  std::size_t length = 0;

  friend bool operator==(const CipherText &, const CipherText &) = default;
};

struct EncodedMessage {
  std::vector<std::uint32_t> digits;
  std::size_t length = 0;
};

/// Big-endian bytes as a base-`radix` number, most significant digit first.
/// Zero encodes as one digit; the empty message as no digits.
EncodedMessage encode_bytes(std::span<const std::uint8_t> data,
                            std::uint32_t radix);
std::vector<std::uint8_t> decode_bytes(std::span<const std::uint32_t> digits,
                                       std::uint32_t radix, std::size_t length);

enum class Layers { both, first_only };

CipherText encrypt(const KeyMaterial &key, std::span<const std::uint8_t> data,
                   Layers layers = Layers::both);
std::vector<std::uint8_t> decrypt(const KeyMaterial &key, const CipherText &ct);

/// Advance y0 along its inverse cycle; negative steps walk backwards.
KeyMaterial rotate_sub_key(const KeyMaterial &key, std::int64_t steps);

}  // namespace qcipher

#endif  // QCIPHER_CRYPTO_HPP
