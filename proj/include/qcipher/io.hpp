// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_IO_HPP
#define QCIPHER_IO_HPP

// Line-oriented text formats. Every document starts with
//
//   format: qcipher/1
//   kind: <quasigroup|key|ciphertext|triple>
//
// followed by `name: value` lines. Lists are single-space separated
// integers. A `table:` line is followed by exactly `order` rows. Output is
// canonical, so store(load(store(x))) reproduces the same bytes.

#include <optional>
#include <string>
#include <string_view>

#include "qcipher/crypto.hpp"
#include "qcipher/morphisms.hpp"
#include "qcipher/quasigroup.hpp"

namespace qcipher {

inline constexpr std::string_view kFormatTag = "qcipher/1";

struct QuasigroupDocument {
  Quasigroup q;
  std::optional<ElementSet> sub;
};

std::string format_quasigroup(const Quasigroup &q,
                              const ElementSet *sub = nullptr);
std::string format_squasigroup(const SQuasigroup &sq);
QuasigroupDocument parse_quasigroup(std::string_view text);
/// Same format; the `sub` field is required.
SQuasigroup parse_squasigroup(std::string_view text);

std::string format_key(const KeyMaterial &key);
KeyMaterial parse_key(std::string_view text);

std::string format_ciphertext(const CipherText &ct);
CipherText parse_ciphertext(std::string_view text);

std::string format_triple(const IsotopismTriple &t);
IsotopismTriple parse_triple(std::string_view text);

/// "1,2,0", "1 2 0" and "[1, 2, 0]" are all accepted.
Permutation parse_permutation(std::string_view text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace qcipher

#endif  // QCIPHER_IO_HPP
