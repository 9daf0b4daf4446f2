// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/constructions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qcipher/properties.hpp"
#include "qcipher/random.hpp"

namespace qcipher {

Quasigroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclic group order must be >= 1");
  Table t(n, std::vector<Element>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return Quasigroup(t);
}

KeedwellParams KeedwellParams::make(std::uint32_t n, std::uint32_t r,
                                    std::uint32_t s) {
  if (n < 2) throw Error(Errc::invalid_argument, "Keedwell order n must be >= 2");
  if (r == 0 || s == 0 || r >= n || s >= n) {
    std::ostringstream os;
    os << "Keedwell exponents must satisfy 1 <= r, s <= n-1 (n=" << n
       << ", r=" << r << ", s=" << s << ")";
    throw Error(Errc::invalid_argument, os.str());
  }
  if ((std::uint64_t(r) * s) % n != 1 % n) {
    std::ostringstream os;
    os << "Keedwell exponents must satisfy r*s = 1 (mod n), i.e. rs = n+1 "
          "after reduction; got r*s = "
       << std::uint64_t(r) * s << " (mod " << n << ") = "
       << (std::uint64_t(r) * s) % n;
    throw Error(Errc::invalid_argument, os.str());
  }
  return KeedwellParams{n, r, s};
}

std::uint32_t KeedwellParams::crossed_inverse_exponent() const noexcept {
  std::uint64_t neg = (n - r % n) % n;
  return std::uint32_t(neg * neg % n * neg % n);
}

Quasigroup keedwell_cipq(const KeedwellParams &p) {
  Table t(p.n, std::vector<Element>(p.n));
  for (std::uint64_t x = 0; x < p.n; ++x)
    for (std::uint64_t y = 0; y < p.n; ++y)
      t[x][y] = Element((p.r * x + p.s * y) % p.n);
  return Quasigroup(t);
}

Quasigroup keedwell_over_group(const Quasigroup &g, std::uint32_t r,
                               std::uint32_t s) {
  const auto n = std::uint32_t(g.order());
  KeedwellParams::make(n, r, s);
  auto e = identity_element(g);
  if (!e) throw Error(Errc::precondition, "base structure has no identity");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (g.product(x, y) != g.product(y, x))
        throw Error(Errc::precondition, "base group is not abelian");
      for (Element z = 0; z < n; ++z)
        if (g.product(g.product(x, y), z) != g.product(x, g.product(y, z)))
          throw Error(Errc::precondition, "base structure is not associative");
    }
  auto power = [&](Element a, std::uint32_t k) {
    Element acc = *e;
    for (std::uint32_t i = 0; i < k; ++i) acc = g.product(acc, a);
    return acc;
  };
  std::vector<Element> pr(n), ps(n);
  for (Element a = 0; a < n; ++a) {
    pr[a] = power(a, r);
    ps[a] = power(a, s);
  }
  Table t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x][y] = g.product(pr[x], ps[y]);
  return Quasigroup(t);
}

namespace {

// The six conjugate operations of a quasigroup, all Latin.
Element parastrophe(const Quasigroup &p, int kind, Element x, Element y) {
  switch (kind) {
    case 0:
      return p.product(x, y);
    case 1:
      return p.product(y, x);
    case 2:
      return p.left_divide(x, y);
    case 3:
      return p.left_divide(y, x);
    case 4:
      return p.right_divide(y, x);
    default:
      return p.right_divide(x, y);
  }
}

std::vector<Permutation> central_automorphisms(const Quasigroup &p) {
  AutGroup aut = automorphism_group(p, std::max<std::size_t>(64, kAutomorphismSearchCap));
  std::vector<Permutation> centre;
  for (const auto &a : aut.elements) {
    bool central = std::all_of(aut.elements.begin(), aut.elements.end(),
                               [&](const Permutation &b) {
                                 return a.then(b) == b.then(a);
                               });
    if (central) centre.push_back(a);
  }
  return centre;
}

struct Block {
  int kind = 0;
  Permutation pre_x, pre_y, post;
};

}  // namespace

SQuasigroup embed_as_initial(const Quasigroup &p, std::uint64_t rng_seed,
                             bool strict_initial) {
  const auto n = Element(p.order());
  if (n < 2) throw Error(Errc::invalid_argument, "embedding requires order n >= 2");

  ElementSet sub(n);
  for (Element i = 0; i < n; ++i) sub[i] = i;

  auto assemble = [&](const std::array<Block, 3> &blocks) {
    auto mu = [&](const Block &b, Element x, Element y) {
      return b.post[parastrophe(p, b.kind, b.pre_x[x], b.pre_y[y])];
    };
    Table t(2 * n, std::vector<Element>(2 * n));
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        t[x][y] = p.product(x, y);
        t[x][n + y] = n + mu(blocks[0], x, y);
        t[n + x][y] = n + mu(blocks[1], x, y);
        t[n + x][n + y] = mu(blocks[2], x, y);
      }
    return Quasigroup(t);
  };

  const Permutation id = Permutation::identity(n);
  if (!strict_initial) {
    Block plain{0, id, id, id};
    return SQuasigroup(assemble({plain, plain, plain}), sub);
  }

  const auto centre = central_automorphisms(p);
  Rng rng(rng_seed);
  auto pick = [&]() -> const Permutation & {
    return centre[rng.below(centre.size())];
  };
  for (int attempt = 0; attempt < kStrictEmbeddingAttempts; ++attempt) {
    std::array<Block, 3> blocks;
    for (auto &b : blocks) {
      b.kind = int(rng.below(6));
      b.pre_x = pick();
      b.pre_y = pick();
      b.post = pick();
    }
    Quasigroup u = assemble(blocks);
    if (!has_property(u, PropertyKind::CIP)) return SQuasigroup(std::move(u), sub);
  }
  std::ostringstream os;
  os << "strict embedding failed: all " << kStrictEmbeddingAttempts
     << " attempts produced a globally cross-inverse table";
  throw Error(Errc::limit_exceeded, os.str());
}

std::pair<Quasigroup, HolomorphTag> holomorph(const Quasigroup &l,
                                              std::vector<Permutation> group) {
  const std::size_t m = l.order();
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  if (group.empty()) throw Error(Errc::precondition, "automorphism group is empty");
  for (const auto &a : group) {
    if (a.size() != m)
      throw Error(Errc::invalid_argument, "automorphism size mismatch");
    if (!is_automorphism(l, a))
      throw Error(Errc::precondition,
                  "holomorph group contains a non-automorphism " + a.to_string());
  }
  if (!std::binary_search(group.begin(), group.end(), Permutation::identity(m)))
    throw Error(Errc::precondition, "holomorph group lacks the identity");

  const std::size_t k = group.size();
  auto rank = [&](const Permutation &p) -> std::size_t {
    auto it = std::lower_bound(group.begin(), group.end(), p);
    if (it == group.end() || *it != p)
      throw Error(Errc::precondition, "holomorph group is not closed");
    return std::size_t(it - group.begin());
  };
  std::vector<std::size_t> compose(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      compose[i * k + j] = rank(group[i].then(group[j]));

  HolomorphTag tag{m, std::move(group)};
  Table t(m * k, std::vector<Element>(m * k));
  for (std::size_t i = 0; i < k; ++i)
    for (Element x = 0; x < m; ++x)
      for (std::size_t j = 0; j < k; ++j) {
        const Permutation &b = tag.automorphisms[j];
        for (Element y = 0; y < m; ++y)
          t[tag.flat(i, x)][tag.flat(j, y)] =
              tag.flat(compose[i * k + j], l.product(b[x], y));
      }
  return {Quasigroup(t), std::move(tag)};
}

std::pair<SQuasigroup, HolomorphTag> smarandache_holomorph(
    const SQuasigroup &sq, std::size_t max_order) {
  AutGroup saum = smarandache_automorphism_group(sq, max_order);
  auto [h, tag] = holomorph(sq.q(), saum.elements);
  ElementSet sub;
  for (std::size_t i = 0; i < tag.group_size(); ++i)
    for (Element x : sq.sub()) sub.push_back(tag.flat(i, x));
  return {SQuasigroup(std::move(h), std::move(sub)), std::move(tag)};
}

Quasigroup apply_isotopism(const Quasigroup &q, const IsotopismTriple &t) {
  const std::size_t m = q.order();
  if (t.a.size() != m || t.b.size() != m || t.c.size() != m)
    throw Error(Errc::invalid_argument, "triple size does not match order");
  Table out(m, std::vector<Element>(m));
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) out[t.a[x]][t.b[y]] = t.c[q.product(x, y)];
  return Quasigroup(out);
}

IsotopismTriple v_to_u_triple(const Permutation &beta,
                                    const Permutation &delta,
                                    const Permutation &gamma) {
  return {delta.inverse().then(beta), gamma.inverse(), delta.inverse()};
}

SIsotope build_V_from_U(const SQuasigroup &u, const Permutation &beta,
                        const Permutation &delta, const Permutation &gamma) {
  const std::size_t m = u.q().order();
  if (beta.size() != m || delta.size() != m || gamma.size() != m)
    throw Error(Errc::invalid_argument, "permutation size does not match order");
  if (!beta.stabilizes(u.sub()) || !is_automorphism(u.q(), beta))
    throw Error(Errc::precondition,
                "beta is not a Smarandache automorphism of U");
  if (!delta.stabilizes(u.sub()))
    throw Error(Errc::precondition, "delta does not map the sub onto itself");
  if (!gamma.stabilizes(u.sub()))
    throw Error(Errc::precondition, "gamma does not map the sub onto itself");

  IsotopismTriple forward{beta.inverse().then(delta), gamma, delta};
  return {SQuasigroup(apply_isotopism(u.q(), forward), u.sub()),
          std::move(forward)};
}

}  // namespace qcipher
