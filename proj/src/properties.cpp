// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/properties.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace qcipher {

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::WIP:
      return "wip";
    case PropertyKind::CIP:
      return "cip";
    case PropertyKind::AIP:
      return "aip";
  }
  return "?";
}

std::optional<PropertyKind> parse_property(std::string_view name) {
  std::string lower(name);
  for (char &c : lower) c = char(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "wip") return PropertyKind::WIP;
  if (lower == "cip") return PropertyKind::CIP;
  if (lower == "aip") return PropertyKind::AIP;
  return std::nullopt;
}

std::optional<Permutation> right_inverse_map(const Quasigroup &q) {
  if (auto e = identity_element(q)) {
    std::vector<Element> v(q.order());
    for (Element x = 0; x < q.order(); ++x) v[x] = q.left_divide(x, *e);
    return Permutation(std::move(v));
  }
  return inverse_maps(q).rho;
}

std::optional<Permutation> left_inverse_map(const Quasigroup &q) {
  if (auto e = identity_element(q)) {
    std::vector<Element> v(q.order());
    for (Element x = 0; x < q.order(); ++x) v[x] = q.right_divide(x, *e);
    return Permutation(std::move(v));
  }
  return inverse_maps(q).lambda;
}

bool has_property(const Quasigroup &q, PropertyKind kind) {
  auto rho = right_inverse_map(q);
  if (!rho) return false;
  const auto m = Element(q.order());
  const Permutation &r = *rho;
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      bool holds = false;
      switch (kind) {
        case PropertyKind::CIP:
          holds = q.product(q.product(x, y), r[x]) == y;
          break;
        case PropertyKind::WIP:
          holds = q.product(x, r[q.product(y, x)]) == r[y];
          break;
        case PropertyKind::AIP:
          holds = r[q.product(x, y)] == q.product(r[x], r[y]);
          break;
      }
      if (!holds) return false;
    }
  }
  return true;
}

std::array<bool, 4> cip_forms(const Quasigroup &q) {
  std::array<bool, 4> forms{false, false, false, false};
  const auto m = Element(q.order());
  if (auto rho = right_inverse_map(q)) {
    const Permutation &r = *rho;
    forms[0] = forms[1] = true;
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y) {
        forms[0] = forms[0] && q.product(q.product(x, y), r[x]) == y;
        forms[1] = forms[1] && q.product(x, q.product(y, r[x])) == y;
      }
  }
  if (auto lambda = left_inverse_map(q)) {
    const Permutation &l = *lambda;
    forms[2] = forms[3] = true;
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y) {
        forms[2] = forms[2] && q.product(l[x], q.product(y, x)) == y;
        forms[3] = forms[3] && q.product(q.product(l[x], y), x) == y;
      }
  }
  return forms;
}

bool is_smarandache_property(const SQuasigroup &sq, PropertyKind kind) {
  return has_property(induced_subquasigroup(sq.q(), sq.sub()), kind);
}

CycleDecomposition cycle_decomposition(const Permutation &p) {
  CycleDecomposition out;
  std::vector<bool> seen(p.size(), false);
  for (Element start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Element> cycle;
    for (Element x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.lengths.push_back(cycle.size());
    out.cycles.push_back(std::move(cycle));
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

CycleDecomposition inverse_cycles(const Quasigroup &q) {
  auto maps = inverse_maps(q);
  if (!maps.rho) throw Error(Errc::precondition, "no right crossed inverse map");
  return cycle_decomposition(*maps.rho);
}

bool is_unipotent(const Quasigroup &q) {
  Element square = q.product(0, 0);
  for (Element x = 1; x < q.order(); ++x)
    if (q.product(x, x) != square) return false;
  return true;
}

}  // namespace qcipher
