// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/permutation.hpp"

#include <numeric>
#include <sstream>

namespace qcipher {

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Element v = images_[i];
    if (v >= images_.size() || seen[v]) {
      std::ostringstream os;
      os << "not a permutation: image of " << i << " is " << v;
      throw Error(Errc::invalid_argument, os.str());
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<Element> v(size);
  std::iota(v.begin(), v.end(), Element{0});
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Element Permutation::apply(Element x) const {
  if (x >= images_.size())
    throw Error(Errc::out_of_range, "permutation argument out of range");
  return images_[x];
}

Permutation Permutation::then(const Permutation &next) const {
  if (next.size() != size())
    throw Error(Errc::invalid_argument, "permutation size mismatch");
  Permutation r;
  r.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x) r.images_[x] = next.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x) r.images_[images_[x]] = Element(x);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation &psi) const {
  return psi.inverse().then(*this).then(psi);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::stabilizes(std::span<const Element> set) const {
  std::vector<bool> in(size(), false);
  for (Element x : set) {
    if (x >= size()) return false;
    in[x] = true;
  }
  for (Element x : set)
    if (!in[images_[x]]) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Permutation perm_algebra(PermOp op, const Permutation &p, const Permutation *q) {
  switch (op) {
    case PermOp::invert:
      return p.inverse();
    case PermOp::compose:
    case PermOp::conjugate:
      if (!q) throw Error(Errc::invalid_argument, "second permutation required");
      if (q->size() != p.size())
        throw Error(Errc::invalid_argument, "permutation size mismatch");
      return op == PermOp::compose ? p.then(*q) : p.conjugated_by(*q);
  }
  throw Error(Errc::invalid_argument, "unknown permutation op");
}

}  // namespace qcipher
