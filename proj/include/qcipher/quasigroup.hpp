// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_QUASIGROUP_HPP
#define QCIPHER_QUASIGROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcipher/permutation.hpp"
#include "qcipher/types.hpp"

namespace qcipher {

using Table = std::vector<std::vector<Element>>;

// A finite quasigroup stored as its Cayley table, table[x][y] = x*y.
// Instances are immutable and always Latin; both division tables are built
// once at construction.
class Quasigroup {
 public:
  /// Validates the table. Throws Errc::not_latin naming the first bad row or
  /// column and the repeated symbol.
  explicit Quasigroup(const Table &table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }

  Element product(Element a, Element b) const {
    return mul_[index(a, b)];
  }
  /// The unique x with a*x = b.
  Element left_divide(Element a, Element b) const {
    return ldiv_[index(a, b)];
  }
  /// The unique y with y*a = b.
  Element right_divide(Element a, Element b) const {
    return rdiv_[index(a, b)];
  }

  Table table() const;
  std::span<const Element> row(Element a) const {
    return {mul_.data() + std::size_t(a) * order_, order_};
  }
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  friend bool operator==(const Quasigroup &a, const Quasigroup &b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t index(Element a, Element b) const {
    return std::size_t(a) * order_ + b;
  }

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::vector<std::string> labels_;
};

/// Free-function form of the Quasigroup constructor.
Quasigroup validate_latin(const Table &table);

enum class EvalKind { product, left_divide, right_divide };

/// Range-checked access to the three quasigroup operations.
Element evaluate(const Quasigroup &q, EvalKind kind, Element a, Element b);

// A quasigroup with a designated proper subquasigroup (the Smarandache
// substructure). `sub` is sorted, closed, and 2 <= |sub| < order.
class SQuasigroup {
 public:
  SQuasigroup(Quasigroup q, ElementSet sub);

  const Quasigroup &q() const noexcept { return q_; }
  const ElementSet &sub() const noexcept { return sub_; }
  bool in_sub(Element x) const { return x < member_.size() && member_[x]; }
  /// Position of x within sub, or nullopt.
  std::optional<std::size_t> sub_position(Element x) const;

  friend bool operator==(const SQuasigroup &a, const SQuasigroup &b) {
    return a.q_ == b.q_ && a.sub_ == b.sub_;
  }

 private:
  Quasigroup q_;
  ElementSet sub_;
  std::vector<bool> member_;
};

std::optional<Element> identity_element(const Quasigroup &q);

// Crossed inverses defined by the universal properties
//   (x*y)*rho(x) = y      and      lambda(x)*(y*x) = y      for all y.
// Either map may be absent; absence is a result, not an error.
struct InverseMaps {
  std::optional<Permutation> rho;
  std::optional<Permutation> lambda;
};

InverseMaps inverse_maps(const Quasigroup &q);

/// Smallest superset of `seed` closed under product and both divisions.
ElementSet subquasigroup_closure(const Quasigroup &q,
                                 std::span<const Element> seed);

bool is_closed(const Quasigroup &q, std::span<const Element> set);

/// Throws Errc::not_closed if `sub` is not closed under the product.
bool is_associative_subset(const Quasigroup &q, std::span<const Element> sub);

/// The subquasigroup on `sub` relabelled to 0..|sub|-1 in sorted order.
Quasigroup induced_subquasigroup(const Quasigroup &q,
                                 std::span<const Element> sub);

inline constexpr std::size_t kSubstructureSearchCap = 64;

/// All nontrivial proper closed subsets reachable as closures of singletons
/// and pairs, sorted and deduplicated.
std::vector<ElementSet> find_substructures(
    const Quasigroup &q, bool require_associative,
    std::size_t max_order = kSubstructureSearchCap);

/// A bijection s with s(x*y) = s(x) o s(y), or nullopt.
std::optional<Permutation> is_isomorphic(const Quasigroup &q1,
                                         const Quasigroup &q2);

/// The table of q2 defined by q2(s(x), s(y)) = s(q1(x, y)).
Quasigroup transport(const Quasigroup &q1, const Permutation &s);

}  // namespace qcipher

#endif  // QCIPHER_QUASIGROUP_HPP
