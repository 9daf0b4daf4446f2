// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/quasigroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "detail/morphism_search.hpp"

namespace qcipher {

Quasigroup::Quasigroup(const Table &table, std::vector<std::string> labels)
    : order_(table.size()), labels_(std::move(labels)) {
  if (order_ == 0) throw Error(Errc::not_latin, "empty table");
  if (!labels_.empty() && labels_.size() != order_)
    throw Error(Errc::invalid_argument, "label count does not match order");

  mul_.resize(order_ * order_);
  ldiv_.assign(order_ * order_, 0);
  rdiv_.assign(order_ * order_, 0);

  for (std::size_t x = 0; x < order_; ++x) {
    if (table[x].size() != order_) {
      std::ostringstream os;
      os << "row " << x << " has " << table[x].size() << " entries, expected "
         << order_;
      throw Error(Errc::not_latin, os.str());
    }
    for (std::size_t y = 0; y < order_; ++y) {
      if (table[x][y] >= order_) {
        std::ostringstream os;
        os << "entry (" << x << "," << y << ") = " << table[x][y]
           << " is out of range";
        throw Error(Errc::not_latin, os.str());
      }
      mul_[index(Element(x), Element(y))] = table[x][y];
    }
  }

  std::vector<int> seen(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < order_; ++y) {
      Element v = mul_[index(Element(x), Element(y))];
      if (seen[v]++) {
        std::ostringstream os;
        os << "row " << x << " repeats symbol " << v;
        throw Error(Errc::not_latin, os.str());
      }
      ldiv_[index(Element(x), v)] = Element(y);
    }
  }
  for (std::size_t y = 0; y < order_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < order_; ++x) {
      Element v = mul_[index(Element(x), Element(y))];
      if (seen[v]++) {
        std::ostringstream os;
        os << "column " << y << " repeats symbol " << v;
        throw Error(Errc::not_latin, os.str());
      }
      rdiv_[index(Element(y), v)] = Element(x);
    }
  }
}

Table Quasigroup::table() const {
  Table t(order_, std::vector<Element>(order_));
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      t[x][y] = mul_[index(Element(x), Element(y))];
  return t;
}

Quasigroup validate_latin(const Table &table) { return Quasigroup(table); }

Element evaluate(const Quasigroup &q, EvalKind kind, Element a, Element b) {
  if (a >= q.order() || b >= q.order())
    throw Error(Errc::out_of_range, "element index out of range");
  switch (kind) {
    case EvalKind::product:
      return q.product(a, b);
    case EvalKind::left_divide:
      return q.left_divide(a, b);
    case EvalKind::right_divide:
      return q.right_divide(a, b);
  }
  throw Error(Errc::invalid_argument, "unknown evaluation kind");
}

SQuasigroup::SQuasigroup(Quasigroup q, ElementSet sub)
    : q_(std::move(q)), sub_(std::move(sub)), member_(q_.order(), false) {
  std::sort(sub_.begin(), sub_.end());
  sub_.erase(std::unique(sub_.begin(), sub_.end()), sub_.end());
  if (sub_.size() < 2 || sub_.size() >= q_.order())
    throw Error(Errc::invalid_argument,
                "designated sub must satisfy 2 <= |sub| < order");
  for (Element x : sub_) {
    if (x >= q_.order())
      throw Error(Errc::out_of_range, "sub element out of range");
    member_[x] = true;
  }
  if (!is_closed(q_, sub_))
    throw Error(Errc::not_closed, "designated sub is not closed");
}

std::optional<std::size_t> SQuasigroup::sub_position(Element x) const {
  auto it = std::lower_bound(sub_.begin(), sub_.end(), x);
  if (it == sub_.end() || *it != x) return std::nullopt;
  return std::size_t(it - sub_.begin());
}

std::optional<Element> identity_element(const Quasigroup &q) {
  // Only the left identity of the first column can be a two-sided identity.
  Element e = q.right_divide(0, 0);
  for (Element x = 0; x < q.order(); ++x)
    if (q.product(e, x) != x || q.product(x, e) != x) return std::nullopt;
  return e;
}

InverseMaps inverse_maps(const Quasigroup &q) {
  const auto m = Element(q.order());
  InverseMaps out;

  std::vector<Element> rho(m);
  bool ok = true;
  for (Element x = 0; x < m && ok; ++x) {
    Element z = q.left_divide(q.product(x, 0), 0);
    for (Element y = 0; y < m && ok; ++y)
      ok = q.product(q.product(x, y), z) == y;
    rho[x] = z;
  }
  if (ok) out.rho = Permutation(std::move(rho));

  std::vector<Element> lambda(m);
  ok = true;
  for (Element x = 0; x < m && ok; ++x) {
    Element z = q.right_divide(q.product(0, x), 0);
    for (Element y = 0; y < m && ok; ++y)
      ok = q.product(z, q.product(y, x)) == y;
    lambda[x] = z;
  }
  if (ok) out.lambda = Permutation(std::move(lambda));
  return out;
}

ElementSet subquasigroup_closure(const Quasigroup &q,
                                 std::span<const Element> seed) {
  std::vector<bool> in(q.order(), false);
  ElementSet members;
  for (Element x : seed) {
    if (x >= q.order()) throw Error(Errc::out_of_range, "seed out of range");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  }
  auto add = [&](Element v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };
  // Every new element is paired with everything before it, itself included.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Element a = members[i], b = members[j];
      add(q.product(a, b));
      add(q.product(b, a));
      add(q.left_divide(a, b));
      add(q.left_divide(b, a));
      add(q.right_divide(a, b));
      add(q.right_divide(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_closed(const Quasigroup &q, std::span<const Element> set) {
  std::vector<bool> in(q.order(), false);
  for (Element x : set) {
    if (x >= q.order()) return false;
    in[x] = true;
  }
  for (Element a : set)
    for (Element b : set)
      if (!in[q.product(a, b)]) return false;
  return true;
}

bool is_associative_subset(const Quasigroup &q, std::span<const Element> sub) {
  if (!is_closed(q, sub))
    throw Error(Errc::not_closed, "subset is not closed under the product");
  for (Element a : sub)
    for (Element b : sub)
      for (Element c : sub)
        if (q.product(q.product(a, b), c) != q.product(a, q.product(b, c)))
          return false;
  return true;
}

Quasigroup induced_subquasigroup(const Quasigroup &q,
                                 std::span<const Element> sub) {
  ElementSet sorted(sub.begin(), sub.end());
  std::sort(sorted.begin(), sorted.end());
  if (!is_closed(q, sorted))
    throw Error(Errc::not_closed, "subset is not closed under the product");
  std::vector<Element> pos(q.order(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = Element(i);
  Table t(sorted.size(), std::vector<Element>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j)
      t[i][j] = pos[q.product(sorted[i], sorted[j])];
  return Quasigroup(t);
}

std::vector<ElementSet> find_substructures(const Quasigroup &q,
                                           bool require_associative,
                                           std::size_t max_order) {
  if (q.order() > max_order) {
    std::ostringstream os;
    os << "substructure search limited to order " << max_order;
    throw Error(Errc::limit_exceeded, os.str());
  }
  std::set<ElementSet> found;
  const auto m = Element(q.order());
  auto consider = [&](ElementSet s) {
    if (s.size() < 2 || s.size() >= m) return;
    if (require_associative && !is_associative_subset(q, s)) return;
    found.insert(std::move(s));
  };
  for (Element a = 0; a < m; ++a) {
    Element one[] = {a};
    consider(subquasigroup_closure(q, one));
    for (Element b = a + 1; b < m; ++b) {
      Element two[] = {a, b};
      consider(subquasigroup_closure(q, two));
    }
  }
  return {found.begin(), found.end()};
}

std::optional<Permutation> is_isomorphic(const Quasigroup &q1,
                                         const Quasigroup &q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  std::optional<Permutation> result;
  detail::search_isomorphisms(q1, q2, nullptr, [&](const Permutation &p) {
    result = p;
    return false;
  });
  return result;
}

Quasigroup transport(const Quasigroup &q1, const Permutation &s) {
  if (s.size() != q1.order())
    throw Error(Errc::invalid_argument, "permutation size mismatch");
  Table t(q1.order(), std::vector<Element>(q1.order()));
  for (Element x = 0; x < q1.order(); ++x)
    for (Element y = 0; y < q1.order(); ++y)
      t[s[x]][s[y]] = s[q1.product(x, y)];
  return Quasigroup(t);
}

}  // namespace qcipher
