// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qcipher/crypto.hpp"
#include "qcipher/properties.hpp"

using namespace qcipher;

namespace {

using Bytes = std::vector<std::uint8_t>;

const KeyMaterial &key11() {
  static const KeyMaterial k = keygen({11, 3, 4, 42});
  return k;
}

// C5 key (unipotent parameters, so it must be allowed explicitly) rotated so
// that the schedule starts at `y`.
KeyMaterial c5_key_at(Element y) {
  KeyMaterial k = keygen({5, 3, 2, 1, true, true});
  for (int i = 0; i < 4 && k.y0 != y; ++i) k = rotate_sub_key(k, 1);
  REQUIRE(k.y0 == y);
  return k;
}

Bytes random_bytes(std::mt19937_64 &gen, std::size_t max_len) {
  Bytes b(gen() % (max_len + 1));
  for (auto &x : b) x = std::uint8_t(gen());
  return b;
}

}  // namespace

TEST_CASE("encode_bytes examples") {
  const auto empty = encode_bytes({}, 5);
  CHECK(empty.digits.empty());
  CHECK(empty.length == 0);

  const Bytes zero = {0x00};
  const auto z = encode_bytes(zero, 5);
  CHECK(z.digits == std::vector<std::uint32_t>{0});
  CHECK(z.length == 1);

  const Bytes ff = {0xFF};
  CHECK(encode_bytes(ff, 5).digits == std::vector<std::uint32_t>{2, 0, 1, 0});

  const Bytes two = {0x01, 0x00};
  CHECK(encode_bytes(two, 16).digits == std::vector<std::uint32_t>{1, 0, 0});
  CHECK_THROWS_AS(encode_bytes(ff, 1), Error);
}

TEST_CASE("encoding round-trips with leading zeros and many radices") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 400; ++trial) {
    Bytes data = random_bytes(gen, 80);
    if (trial % 4 == 0 && !data.empty()) data[0] = 0;
    if (trial % 8 == 0) data.assign(data.size(), 0);
    const std::uint32_t radix = 2 + std::uint32_t(gen() % 60);
    const auto enc = encode_bytes(data, radix);
    for (auto d : enc.digits) CHECK(d < radix);
    if (!enc.digits.empty() && enc.digits.size() > 1) CHECK(enc.digits.front() != 0);
    CHECK(decode_bytes(enc.digits, radix, enc.length) == data);
  }
}

TEST_CASE("encoding matches schoolbook conversion for short inputs") {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 200; ++trial) {
    Bytes data = random_bytes(gen, 7);
    const std::uint32_t radix = 2 + std::uint32_t(gen() % 30);
    std::uint64_t value = 0;
    for (auto b : data) value = value * 256 + b;
    std::vector<std::uint32_t> expected;
    do {
      expected.insert(expected.begin(), std::uint32_t(value % radix));
      value /= radix;
    } while (value);
    if (data.empty()) expected.clear();
    CHECK(encode_bytes(data, radix).digits == expected);
  }
}

TEST_CASE("decode_bytes errors") {
  const std::vector<std::uint32_t> big = {1, 0, 0, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(decode_bytes(big, 2, 1), Error);
  const std::vector<std::uint32_t> bad = {7};
  CHECK_THROWS_AS(decode_bytes(bad, 5, 1), Error);
  CHECK_THROWS_AS(decode_bytes({}, 5, 3), Error);
  CHECK(decode_bytes({}, 5, 0).empty());
}

TEST_CASE("keygen examples and invariants") {
  const KeyMaterial &k = key11();
  CHECK(k.order() == 22);
  CHECK(k.sub_size() == 11);
  CHECK(k.schedule_period() == 10);
  CHECK(k.u.in_sub(k.y0));
  CHECK(k.rho[k.y0] != k.y0);
  CHECK(k.gamma == k.alpha.conjugated_by(k.psi));
  CHECK(k.delta == k.beta.conjugated_by(k.psi));
  CHECK_FALSE(k.alpha.is_identity());
  CHECK_FALSE(k.beta.is_identity());
  CHECK(k.psi.stabilizes(k.u.sub()));
  CHECK(is_smarandache_property(k.u, PropertyKind::CIP));
  CHECK_FALSE(has_property(k.u.q(), PropertyKind::CIP));
  CHECK(apply_isotopism(k.u.q(), k.triple) == k.v.q());
  CHECK(apply_isotopism(k.v.q(), v_to_u_triple(k.beta, k.delta, k.gamma)) ==
        k.u.q());
  CHECK(k.delta_in_saum_v == (is_automorphism(k.v.q(), k.delta) &&
                              k.delta.stabilizes(k.v.sub())));
  CHECK(k.gamma_in_saum_v == (is_automorphism(k.v.q(), k.gamma) &&
                              k.gamma.stabilizes(k.v.sub())));
}

TEST_CASE("keygen is deterministic in the seed") {
  const KeyMaterial again = keygen({11, 3, 4, 42});
  CHECK(again.u == key11().u);
  CHECK(again.triple == key11().triple);
  CHECK(again.y0 == key11().y0);
  const KeyMaterial other = keygen({11, 3, 4, 43});
  CHECK_FALSE((other.u == key11().u && other.triple == key11().triple));
}

TEST_CASE("keygen unipotency policy") {
  CHECK_THROWS_AS(keygen({5, 2, 3, 1}), Error);
  CHECK_THROWS_AS(keygen({5, 3, 2, 1}), Error);
  const KeyMaterial k = keygen({5, 3, 2, 1, true, true});
  CHECK(k.y0 >= 1);
  CHECK(k.y0 <= 4);
  CHECK(k.schedule_period() == 4);
  CHECK_THROWS_AS(keygen({5, 2, 2, 1}), Error);
  // Structured embedding also yields nontrivial SAUM.
  CHECK_NOTHROW(keygen({11, 3, 4, 7, false, false}));
}

TEST_CASE("layer one on C5 follows the worked example") {
  const KeyMaterial k = c5_key_at(2);
  REQUIRE(k.u.sub() == ElementSet{0, 1, 2, 3, 4});
  const Bytes msg = {18};  // 18 = 3*5 + 3
  REQUIRE(encode_bytes(msg, 5).digits == std::vector<std::uint32_t>{3, 3});
  const CipherText ct = encrypt(k, msg, Layers::first_only);
  CHECK(ct.body == std::vector<Element>{2, 4});
  CHECK(ct.length == 1);

  const CipherText full = encrypt(k, msg);
  CHECK(full.body == std::vector<Element>{k.triple.c[2], k.triple.c[4]});
  CHECK(decrypt(k, full) == msg);

  // Layer-1 only value for a single element: 2 (+) 3 = 6 + 6 = 12 = 2.
  CHECK(k.u.q().product(2, 3) == 2);
}

TEST_CASE("rotate_sub_key examples") {
  const KeyMaterial k = c5_key_at(1);
  CHECK(rotate_sub_key(k, 2).y0 == 4);
  CHECK(rotate_sub_key(k, 1).y0 == 3);
  CHECK(rotate_sub_key(k, 3).y0 == 2);
  CHECK(rotate_sub_key(k, 0).y0 == 1);
  CHECK(rotate_sub_key(k, 4).y0 == 1);
  CHECK(rotate_sub_key(k, -1).y0 == 2);
  CHECK(rotate_sub_key(k, 4 * 1000 + 2).y0 == 4);
  const KeyMaterial r = rotate_sub_key(k, 2);
  CHECK(r.u == k.u);
  CHECK(r.triple == k.triple);
}

TEST_CASE("empty message and empty ciphertext") {
  const CipherText ct = encrypt(key11(), {});
  CHECK(ct.body.empty());
  CHECK(ct.length == 0);
  CHECK(decrypt(key11(), ct).empty());
}

TEST_CASE("tampered ciphertexts are rejected") {
  const Bytes msg = {1, 2, 3};
  CipherText ct = encrypt(key11(), msg);
  CipherText out_of_range = ct;
  out_of_range.body[0] = 22;
  CHECK_THROWS_AS(decrypt(key11(), out_of_range), Error);
  CipherText outside = ct;
  outside.body[0] = key11().triple.c[15];
  CHECK_THROWS_AS(decrypt(key11(), outside), Error);
  CipherText short_length = ct;
  short_length.length = 1;
  CHECK_THROWS_AS(decrypt(key11(), short_length), Error);
}

TEST_CASE("key schedule repeats with the cycle period") {
  const KeyMaterial &k = key11();
  std::mt19937_64 gen(53);
  Bytes msg(64);
  for (auto &b : msg) b = std::uint8_t(gen());
  const auto enc = encode_bytes(msg, 11);
  const CipherText ct = encrypt(k, msg, Layers::first_only);
  REQUIRE(ct.body.size() == enc.digits.size());
  REQUIRE(ct.body.size() > 2 * k.schedule_period());
  Element y = k.y0;
  for (std::size_t i = 0; i < enc.digits.size(); ++i) {
    CHECK(ct.body[i] == k.u.q().product(y, enc.digits[i]));
    y = k.rho[y];
  }
  // Equal plaintext digits one period apart give equal ciphertext.
  const std::vector<std::uint8_t> sevens(40, 0x77);
  const auto d = encode_bytes(sevens, 11).digits;
  const CipherText c = encrypt(k, sevens);
  const std::size_t p = k.schedule_period();
  for (std::size_t i = 0; i + p < d.size(); ++i)
    if (d[i] == d[i + p]) CHECK(c.body[i] == c.body[i + p]);
  CHECK(rotate_sub_key(k, std::int64_t(p)).y0 == k.y0);
}

TEST_CASE("layer one is the CIP identity on the sub") {
  const KeyMaterial &k = key11();
  const Quasigroup &u = k.u.q();
  for (Element y : k.u.sub())
    for (Element m : k.u.sub()) CHECK(u.product(u.product(y, m), k.rho[y]) == m);
}

TEST_CASE("layer two transports products") {
  const KeyMaterial &k = key11();
  CHECK(k.triple.c.inverse().then(k.triple.c).is_identity());
  CHECK(is_s_isotopism(k.u, k.v, k.triple));
  for (Element x = 0; x < k.order(); ++x)
    for (Element y = 0; y < k.order(); ++y)
      CHECK(k.triple.c[k.u.q().product(x, y)] ==
            k.v.q().product(k.triple.a[x], k.triple.b[y]));
}

TEST_CASE("layer two stays inside the sub but moves elements") {
  // Every triple component stabilizes the sub, so ciphertext never leaves it.
  std::mt19937_64 gen(59);
  bool moved = false;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const KeyMaterial k = keygen({11, 3, 4, seed});
    CHECK(k.triple.c.stabilizes(k.u.sub()));
    const CipherText ct = encrypt(k, random_bytes(gen, 64));
    for (Element d : ct.body) CHECK(k.u.in_sub(d));
    for (Element x : k.u.sub()) moved = moved || k.triple.c[x] != x;
  }
  CHECK(moved);
}

TEST_CASE("round trips for random keys and messages") {
  std::mt19937_64 gen(61);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const KeyMaterial k = keygen({seed % 2 ? 23u : 11u, seed % 2 ? 5u : 3u,
                                  seed % 2 ? 14u : 4u, seed});
    for (int i = 0; i < 20; ++i) {
      const Bytes msg = random_bytes(gen, 300);
      CHECK(decrypt(k, encrypt(k, msg)) == msg);
    }
  }
}

TEST_CASE("assemble_key rejects inconsistent material") {
  const KeyMaterial &k = key11();
  auto rebuild = [&](auto mutate) {
    KeyMaterial c = k;
    mutate(c);
    return assemble_key(c.params, c.u, c.phi, c.alpha, c.beta, c.psi, c.gamma,
                        c.delta, c.triple, c.y0);
  };
  CHECK_NOTHROW(rebuild([](KeyMaterial &) {}));
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) { c.y0 = 15; }), Error);
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) {
                    c.alpha = Permutation::identity(22);
                    c.gamma = c.alpha;
                  }),
                  Error);
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) { c.triple.c = c.triple.a; }), Error);
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) { c.delta = c.delta.then(c.delta); }), Error);
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) { c.params = KeedwellParams{11, 4, 3}; }), Error);
  CHECK_THROWS_AS(rebuild([](KeyMaterial &c) { c.params = KeedwellParams{13, 4, 10}; }), Error);
  try {
    rebuild([](KeyMaterial &c) { c.y0 = 0; });
    FAIL("expected rejection");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).rfind("invalid key: ", 0) == 0);
  }
}
