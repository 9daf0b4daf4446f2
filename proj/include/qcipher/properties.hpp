// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_PROPERTIES_HPP
#define QCIPHER_PROPERTIES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qcipher/quasigroup.hpp"

namespace qcipher {

enum class PropertyKind { WIP, CIP, AIP };

std::string_view to_string(PropertyKind kind);
/// Accepts "wip", "cip", "aip" in any case.
std::optional<PropertyKind> parse_property(std::string_view name);

// The element-wise right inverse x^rho used by the inverse-property
// identities. In a loop it is the solution of x*z = e. Without an identity
// it is the crossed inverse from inverse_maps(), when that exists.
std::optional<Permutation> right_inverse_map(const Quasigroup &q);
std::optional<Permutation> left_inverse_map(const Quasigroup &q);

//   CIP: (x*y)*x^rho = y
//   WIP: x*(y*x)^rho = y^rho
//   AIP: (x*y)^rho   = x^rho * y^rho
// False (not an error) when the needed inverse map does not exist.
bool has_property(const Quasigroup &q, PropertyKind kind);

/// The four cross-inverse identities evaluated separately:
///   (xy)x^rho = y,  x(yx^rho) = y,  x^lambda(yx) = y,  (x^lambda y)x = y.
std::array<bool, 4> cip_forms(const Quasigroup &q);

/// The property evaluated on the induced designated substructure.
bool is_smarandache_property(const SQuasigroup &sq, PropertyKind kind);

struct CycleDecomposition {
  /// Each cycle starts at its smallest element; cycles ordered by that element.
  std::vector<std::vector<Element>> cycles;
  /// Sorted ascending.
  std::vector<std::size_t> lengths;
};

CycleDecomposition cycle_decomposition(const Permutation &p);

/// Cycles of the crossed-inverse map rho. Throws Errc::precondition when rho
/// does not exist.
CycleDecomposition inverse_cycles(const Quasigroup &q);

bool is_unipotent(const Quasigroup &q);

}  // namespace qcipher

#endif  // QCIPHER_PROPERTIES_HPP
