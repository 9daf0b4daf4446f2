// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/morphisms.hpp"

#include <algorithm>
#include <sstream>

#include "detail/morphism_search.hpp"

namespace qcipher {

bool AutGroup::contains(const Permutation &p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool AutGroup::is_group() const {
  if (elements.empty()) return false;
  if (!contains(Permutation::identity(elements.front().size()))) return false;
  for (const auto &p : elements) {
    if (!contains(p.inverse())) return false;
    for (const auto &q : elements)
      if (!contains(p.then(q))) return false;
  }
  return true;
}

bool is_automorphism(const Quasigroup &q, const Permutation &p) {
  if (p.size() != q.order()) return false;
  for (Element x = 0; x < q.order(); ++x)
    for (Element y = 0; y < q.order(); ++y)
      if (p[q.product(x, y)] != q.product(p[x], p[y])) return false;
  return true;
}

namespace {

void check_cap(const Quasigroup &q, std::size_t max_order) {
  if (q.order() > max_order) {
    std::ostringstream os;
    os << "automorphism search limited to order " << max_order << ", got "
       << q.order();
    throw Error(Errc::limit_exceeded, os.str());
  }
}

AutGroup collect(const Quasigroup &q, const detail::ImageFilter &filter) {
  AutGroup g;
  detail::search_isomorphisms(q, q, filter, [&](const Permutation &p) {
    g.elements.push_back(p);
    return true;
  });
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

}  // namespace

AutGroup automorphism_group(const Quasigroup &q, std::size_t max_order) {
  check_cap(q, max_order);
  return collect(q, nullptr);
}

AutGroup smarandache_automorphism_group(const SQuasigroup &sq,
                                        std::size_t max_order) {
  check_cap(sq.q(), max_order);
  // Sub and complement have fixed sizes, so membership-preserving images of
  // a bijection map sub onto sub.
  AutGroup g = collect(sq.q(), [&sq](Element x, Element v) {
    return sq.in_sub(x) == sq.in_sub(v);
  });
  g.smarandache = true;
  return g;
}

bool is_autotopism(const Quasigroup &q, const IsotopismTriple &t,
                   std::optional<std::span<const Element>> sub) {
  const std::size_t m = q.order();
  if (t.a.size() != m || t.b.size() != m || t.c.size() != m)
    throw Error(Errc::invalid_argument, "triple size mismatch");
  if (sub && !(t.a.stabilizes(*sub) && t.b.stabilizes(*sub) &&
               t.c.stabilizes(*sub)))
    return false;
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (q.product(t.a[x], t.b[y]) != t.c[q.product(x, y)]) return false;
  return true;
}

bool is_s_isotopism(const SQuasigroup &u, const SQuasigroup &v,
                    const IsotopismTriple &t) {
  const std::size_t m = u.q().order();
  if (v.q().order() != m || t.a.size() != m || t.b.size() != m ||
      t.c.size() != m)
    return false;
  if (u.sub().size() != v.sub().size()) return false;
  for (const Permutation *p : {&t.a, &t.b, &t.c})
    for (Element x : u.sub())
      if (!v.in_sub((*p)[x])) return false;
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (v.q().product(t.a[x], t.b[y]) != t.c[u.q().product(x, y)])
        return false;
  return true;
}

bool check_transfer_identity(const Quasigroup &u, const Quasigroup &v,
                             const Permutation &beta, const Permutation &delta,
                             const Permutation &gamma) {
  const std::size_t m = u.order();
  if (v.order() != m || beta.size() != m || delta.size() != m ||
      gamma.size() != m)
    return false;
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (v.product(delta[x], gamma[y]) != delta[u.product(beta[x], y)])
        return false;
  return true;
}

AutGroup conjugate_group(const AutGroup &g, const Permutation &psi) {
  AutGroup out;
  out.smarandache = g.smarandache;
  out.elements.reserve(g.size());
  for (const auto &a : g.elements) {
    if (a.size() != psi.size())
      throw Error(Errc::invalid_argument, "permutation size mismatch");
    out.elements.push_back(a.conjugated_by(psi));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace qcipher
