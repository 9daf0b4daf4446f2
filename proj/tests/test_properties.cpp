// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qcipher/constructions.hpp"
#include "qcipher/properties.hpp"

using namespace qcipher;

namespace {

Quasigroup z(std::uint32_t n) { return Quasigroup(oracle::additive_table(n, 1, 1)); }

Quasigroup keedwell(std::uint32_t n, std::uint32_t r, std::uint32_t s) {
  return keedwell_cipq(KeedwellParams::make(n, r, s));
}

Table direct_product(const Table &a, const Table &b) {
  const std::size_t n = a.size(), m = b.size();
  Table t(n * m, std::vector<Element>(n * m));
  for (std::size_t x = 0; x < n * m; ++x)
    for (std::size_t y = 0; y < n * m; ++y)
      t[x][y] = Element(a[x / m][y / m] * m + b[x % m][y % m]);
  return t;
}

}  // namespace

TEST_CASE("property names round-trip") {
  for (auto k : {PropertyKind::WIP, PropertyKind::CIP, PropertyKind::AIP})
    CHECK(parse_property(to_string(k)) == k);
  CHECK(parse_property("CIP") == PropertyKind::CIP);
  CHECK_FALSE(parse_property("lip").has_value());
}

TEST_CASE("has_property examples") {
  CHECK(has_property(keedwell(5, 3, 2), PropertyKind::CIP));
  for (std::uint32_t n = 1; n <= 12; ++n) CHECK(has_property(z(n), PropertyKind::CIP));
  CHECK(has_property(Quasigroup(oracle::klein_table()), PropertyKind::CIP));
  const Quasigroup s3(oracle::s3_table());
  CHECK_FALSE(has_property(s3, PropertyKind::AIP));
  CHECK_FALSE(has_property(s3, PropertyKind::CIP));
  // Groups are always WIP.
  CHECK(has_property(s3, PropertyKind::WIP));
}

TEST_CASE("missing inverse map yields false, not an error") {
  std::mt19937_64 gen(13);
  int without = 0;
  for (int trial = 0; trial < 200 && without < 5; ++trial) {
    const Quasigroup q(oracle::random_latin(5, gen));
    if (identity_element(q) || inverse_maps(q).rho) continue;
    ++without;
    for (auto k : {PropertyKind::WIP, PropertyKind::CIP, PropertyKind::AIP})
      CHECK_FALSE(has_property(q, k));
  }
  CHECK(without > 0);
}

TEST_CASE("loop enumeration matches known counts") {
  const std::size_t expected[] = {1, 1, 1, 4, 56};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    oracle::for_each_reduced_loop(n, [&](const Table &) { ++count; });
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("Osborn equivalence on every loop of order at most 6") {
  std::size_t loops = 0, cip = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_each_reduced_loop(n, [&](const Table &t) {
      const Quasigroup q(t);
      const bool w = has_property(q, PropertyKind::WIP);
      const bool c = has_property(q, PropertyKind::CIP);
      const bool a = has_property(q, PropertyKind::AIP);
      const auto ref = oracle::loop_properties(t);
      CHECK(w == ref.wip);
      CHECK(c == ref.cip);
      CHECK(a == ref.aip);
      CHECK((w && a) == c);
      ++loops;
      cip += c;
    });
  }
  CHECK(loops == 1 + 1 + 1 + 4 + 56 + 9408);
  CHECK(cip > 0);
}

TEST_CASE("all four CIP forms agree on CIP quasigroups") {
  std::vector<Quasigroup> corpus;
  for (std::uint32_t n = 2; n <= 20; ++n)
    for (std::uint32_t r = 1; r < n; ++r)
      for (std::uint32_t s = 1; s < n; ++s)
        if ((r * s) % n == 1) corpus.push_back(keedwell(n, r, s));
  corpus.push_back(Quasigroup(oracle::klein_table()));
  for (const auto &q : corpus) {
    REQUIRE(has_property(q, PropertyKind::CIP));
    const auto forms = cip_forms(q);
    CHECK(forms[0]);
    CHECK(forms[1]);
    CHECK(forms[2]);
    CHECK(forms[3]);
  }
  const auto s3 = cip_forms(Quasigroup(oracle::s3_table()));
  CHECK_FALSE(s3[0]);
}

TEST_CASE("is_smarandache_property examples") {
  const SQuasigroup u = embed_as_initial(keedwell(5, 3, 2), 2, false);
  CHECK(is_smarandache_property(u, PropertyKind::CIP));
  CHECK(is_smarandache_property(SQuasigroup(z(6), {0, 3}), PropertyKind::CIP));

  // S3 x Z2 with the S3 copy designated.
  const Quasigroup s3z2(direct_product(oracle::s3_table(), oracle::additive_table(2, 1, 1)));
  const SQuasigroup with_s3(s3z2, {0, 2, 4, 6, 8, 10});
  CHECK_FALSE(is_smarandache_property(with_s3, PropertyKind::CIP));
  CHECK(is_smarandache_property(SQuasigroup(s3z2, {0, 1}), PropertyKind::CIP));
}

TEST_CASE("inverse_cycles examples") {
  const auto c5 = inverse_cycles(keedwell(5, 3, 2));
  CHECK(c5.cycles == std::vector<std::vector<Element>>{{0}, {1, 3, 4, 2}});
  CHECK(c5.lengths == std::vector<std::size_t>{1, 4});

  const auto c11 = inverse_cycles(keedwell(11, 3, 4));
  CHECK(c11.cycles == std::vector<std::vector<Element>>{{0}, {1, 6, 3, 7, 9, 10, 5, 8, 4, 2}});
  CHECK(c11.lengths == std::vector<std::size_t>{1, 10});

  const auto z2 = inverse_cycles(z(2));
  CHECK(z2.lengths == std::vector<std::size_t>{1, 1});

  try {
    inverse_cycles(Quasigroup(oracle::s3_table()));
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::precondition);
    CHECK(std::string(e.what()) == "no right crossed inverse map");
  }
}

TEST_CASE("inverse cycles partition the domain") {
  for (std::uint32_t n = 2; n <= 40; ++n)
    for (std::uint32_t r = 1; r < n; ++r) {
      std::uint32_t s = 0;
      for (std::uint32_t c = 1; c < n; ++c)
        if ((r * c) % n == 1) s = c;
      if (!s) continue;
      const Quasigroup q = keedwell(n, r, s);
      const auto rho = *inverse_maps(q).rho;
      const auto d = inverse_cycles(q);
      CHECK(std::accumulate(d.lengths.begin(), d.lengths.end(), std::size_t(0)) == n);
      std::vector<int> hits(n);
      for (const auto &cycle : d.cycles) {
        CHECK(cycle.front() == *std::min_element(cycle.begin(), cycle.end()));
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          ++hits[cycle[i]];
          CHECK(rho[cycle[i]] == cycle[(i + 1) % cycle.size()]);
        }
        Element x = cycle.front();
        for (std::size_t k = 0; k < cycle.size(); ++k) x = rho[x];
        CHECK(x == cycle.front());
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      for (std::size_t i = 1; i < d.cycles.size(); ++i)
        CHECK(d.cycles[i - 1].front() < d.cycles[i].front());
    }
}

TEST_CASE("is_unipotent examples") {
  CHECK(is_unipotent(keedwell(5, 3, 2)));
  CHECK_FALSE(is_unipotent(keedwell(11, 3, 4)));
  CHECK(is_unipotent(z(2)));
  CHECK_FALSE(is_unipotent(z(3)));
  CHECK(is_unipotent(Quasigroup(oracle::klein_table())));
  CHECK(is_unipotent(Quasigroup(Table{{0}})));
}

TEST_CASE("Keedwell unipotency criterion") {
  for (std::uint32_t n = 2; n <= 40; ++n)
    for (std::uint32_t r = 1; r < n; ++r)
      for (std::uint32_t s = 1; s < n; ++s) {
        if ((r * s) % n != 1) continue;
        const Quasigroup q = keedwell(n, r, s);
        bool scan = true;
        for (Element x = 1; x < n; ++x) scan = scan && q.product(x, x) == q.product(0, 0);
        CHECK(is_unipotent(q) == scan);
        CHECK(is_unipotent(q) == ((r + s) % n == 0));
      }
}
