// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCIPHER_DETAIL_MORPHISM_SEARCH_HPP
#define QCIPHER_DETAIL_MORPHISM_SEARCH_HPP

#include <functional>
#include <vector>

#include "qcipher/quasigroup.hpp"

namespace qcipher::detail {

/// Greedy generating sequence: each entry is the smallest element outside
/// the subquasigroup generated by the previous ones.
std::vector<Element> generating_sequence(const Quasigroup &q);

using ImageFilter = std::function<bool(Element x, Element image)>;

// Backtracking search for bijections s : from -> to with
// s(x*y) = s(x) o s(y). Only generator images are branched on; everything
// else is forced by propagating products, and a contradiction prunes the
// branch. Generator images are tried in increasing order so the visit
// order is deterministic.
//
// `visit` returns false to stop the search.
void search_isomorphisms(const Quasigroup &from, const Quasigroup &to,
                         const ImageFilter &filter,
                         const std::function<bool(const Permutation &)> &visit);

}  // namespace qcipher::detail

#endif  // QCIPHER_DETAIL_MORPHISM_SEARCH_HPP
