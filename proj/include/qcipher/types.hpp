// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_TYPES_HPP
#define QCIPHER_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcipher {

/// Canonical element index. Every finite structure here lives on 0..m-1.
using Element = std::uint32_t;

using ElementSet = std::vector<Element>;

enum class Errc {
  invalid_argument,
  not_latin,
  not_closed,
  out_of_range,
  precondition,
  limit_exceeded,
  parse,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qcipher

#endif  // QCIPHER_TYPES_HPP
