// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "detail/morphism_search.hpp"

#include <limits>

namespace qcipher::detail {

std::vector<Element> generating_sequence(const Quasigroup &q) {
  std::vector<Element> gens;
  std::vector<bool> covered(q.order(), false);
  for (Element x = 0; x < q.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (Element y : subquasigroup_closure(q, gens)) covered[y] = true;
  }
  return gens;
}

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

class Search {
 public:
  Search(const Quasigroup &from, const Quasigroup &to, const ImageFilter &filter,
         const std::function<bool(const Permutation &)> &visit)
      : from_(from), to_(to), filter_(filter), visit_(visit),
        gens_(generating_sequence(from)),
        img_(from.order(), kUnset), used_(from.order(), false) {}

  void run() { recurse(0); }

 private:
  bool assign(Element x, Element v) {
    if (img_[x] != kUnset) return img_[x] == v;
    if (used_[v]) return false;
    if (filter_ && !filter_(x, v)) return false;
    img_[x] = v;
    used_[v] = true;
    assigned_.push_back(x);
    return true;
  }

  bool propagate() {
    while (head_ < assigned_.size()) {
      Element x = assigned_[head_];
      for (std::size_t i = 0; i <= head_; ++i) {
        Element y = assigned_[i];
        if (!assign(from_.product(x, y), to_.product(img_[x], img_[y])))
          return false;
        if (!assign(from_.product(y, x), to_.product(img_[y], img_[x])))
          return false;
      }
      ++head_;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (assigned_.size() > mark) {
      Element x = assigned_.back();
      assigned_.pop_back();
      used_[img_[x]] = false;
      img_[x] = kUnset;
    }
    head_ = mark;
  }

  // Returns false once the visitor asked to stop.
  bool recurse(std::size_t k) {
    while (k < gens_.size() && img_[gens_[k]] != kUnset) ++k;
    if (k == gens_.size()) {
      return visit_(Permutation(img_));
    }
    Element g = gens_[k];
    std::size_t mark = assigned_.size();
    for (Element v = 0; v < to_.order(); ++v) {
      bool ok = assign(g, v) && propagate();
      if (ok && !recurse(k + 1)) return false;
      undo(mark);
    }
    return true;
  }

  const Quasigroup &from_;
  const Quasigroup &to_;
  const ImageFilter &filter_;
  const std::function<bool(const Permutation &)> &visit_;
  std::vector<Element> gens_;
  std::vector<Element> img_;
  std::vector<bool> used_;
  std::vector<Element> assigned_;
  std::size_t head_ = 0;
};

}  // namespace

void search_isomorphisms(const Quasigroup &from, const Quasigroup &to,
                         const ImageFilter &filter,
                         const std::function<bool(const Permutation &)> &visit) {
  if (from.order() != to.order() || from.order() == 0) return;
  Search(from, to, filter, visit).run();
}

}  // namespace qcipher::detail
