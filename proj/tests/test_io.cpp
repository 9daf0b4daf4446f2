// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "qcipher/constructions.hpp"
#include "qcipher/io.hpp"

using namespace qcipher;

namespace {

std::string golden(const std::string &name) {
  return read_file(std::string(QCIPHER_GOLDEN_DIR) + "/" + name);
}

const std::string kGoldenMessage = "Attack at dawn. Bring the quasigroups.\n";

std::string parse_failure(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("quasigroup text round-trip is byte exact") {
  const Quasigroup c5 = keedwell_cipq(KeedwellParams::make(5, 3, 2));
  const std::string text = format_quasigroup(c5);
  CHECK(text ==
        "format: qcipher/1\nkind: quasigroup\norder: 5\ntable:\n"
        "0 2 4 1 3\n3 0 2 4 1\n1 3 0 2 4\n4 1 3 0 2\n2 4 1 3 0\n");
  const auto doc = parse_quasigroup(text);
  CHECK(doc.q == c5);
  CHECK_FALSE(doc.sub.has_value());
  CHECK(format_quasigroup(doc.q) == text);

  std::mt19937_64 gen(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Quasigroup q(oracle::random_latin(1 + gen() % 12, gen));
    const std::string t = format_quasigroup(q);
    CHECK(format_quasigroup(parse_quasigroup(t).q) == t);
  }
}

TEST_CASE("squasigroup and labels round-trip") {
  const SQuasigroup u = embed_as_initial(keedwell_cipq(KeedwellParams::make(5, 3, 2)), 3, true);
  const std::string text = format_squasigroup(u);
  CHECK(parse_squasigroup(text) == u);
  CHECK(format_squasigroup(parse_squasigroup(text)) == text);

  const Quasigroup labelled({{0, 1}, {1, 0}}, {"e", "a"});
  const std::string lt = format_quasigroup(labelled);
  CHECK(lt.find("labels: e a\n") != std::string::npos);
  CHECK(parse_quasigroup(lt).q == labelled);
  CHECK_THROWS_AS(format_quasigroup(Quasigroup(Table{{0, 1}, {1, 0}}, {"e", "a b"})), Error);
}

TEST_CASE("quasigroup parse diagnostics") {
  const std::string dup_row =
      "format: qcipher/1\nkind: quasigroup\norder: 3\ntable:\n0 1 2\n1 1 0\n2 0 1\n";
  const std::string msg = parse_failure([&] { parse_quasigroup(dup_row); });
  CHECK(msg.find("row 1 repeats symbol 1") != std::string::npos);
  CHECK(msg.find("line 4") != std::string::npos);

  CHECK(parse_failure([] { parse_quasigroup("kind: quasigroup\n"); })
            .find("format: qcipher/1") != std::string::npos);
  CHECK(parse_failure([] { parse_quasigroup("format: qcipher/2\n"); }) != "");
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: key\norder: 1\ntable:\n0\n");
        }).find("expected kind 'quasigroup'") != std::string::npos);
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: quasigroup\norder: 2\ntable:\n0 1\n");
        }).find("table ends after 1 of 2 rows") != std::string::npos);
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: quasigroup\norder: 2\ntable:\n0 1\n1 x\n");
        }).find("line 6") != std::string::npos);
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: quasigroup\ncolour: red\norder: 1\ntable:\n0\n");
        }).find("unknown field 'colour'") != std::string::npos);
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: quasigroup\norder: 1\norder: 1\ntable:\n0\n");
        }).find("duplicate field 'order'") != std::string::npos);
  CHECK(parse_failure([] {
          parse_quasigroup("format: qcipher/1\nkind: quasigroup\ntable:\n0\n");
        }).find("'order' must precede 'table'") != std::string::npos);
  CHECK(parse_failure([] {
          parse_squasigroup("format: qcipher/1\nkind: quasigroup\norder: 1\ntable:\n0\n");
        }).find("missing field 'sub'") != std::string::npos);
}

TEST_CASE("key round-trip and golden file") {
  const KeyMaterial key = keygen({11, 3, 4, 42});
  const std::string text = format_key(key);
  CHECK(text == golden("key_n11_r3_s4_seed42.txt"));
  const KeyMaterial back = parse_key(text);
  CHECK(format_key(back) == text);
  CHECK(back.u == key.u);
  CHECK(back.v == key.v);
  CHECK(back.triple == key.triple);
  CHECK(back.rho == key.rho);
}

TEST_CASE("ciphertext round-trip and golden file") {
  const KeyMaterial key = parse_key(golden("key_n11_r3_s4_seed42.txt"));
  const std::vector<std::uint8_t> msg(kGoldenMessage.begin(), kGoldenMessage.end());
  const CipherText ct = encrypt(key, msg);
  const std::string text = format_ciphertext(ct);
  CHECK(text == golden("message_n11_seed42.ct"));
  CHECK(parse_ciphertext(text) == ct);
  CHECK(format_ciphertext(parse_ciphertext(text)) == text);
  CHECK(decrypt(key, parse_ciphertext(golden("message_n11_seed42.ct"))) == msg);

  const CipherText empty;
  CHECK(format_ciphertext(empty) == "format: qcipher/1\nkind: ciphertext\nlength: 0\nbody:\n");
  CHECK(parse_ciphertext(format_ciphertext(empty)) == empty);
}

TEST_CASE("key parse names the missing field") {
  std::string text = golden("key_n11_r3_s4_seed42.txt");
  const auto start = text.find("gamma:");
  const auto end = text.find('\n', start);
  text.erase(start, end - start + 1);
  CHECK(parse_failure([&] { parse_key(text); }) == "missing field 'gamma'");
}

TEST_CASE("key parse rejects tampered material") {
  const std::string text = golden("key_n11_r3_s4_seed42.txt");
  std::string bad_y0 = text;
  const auto pos = bad_y0.find("y0: ");
  bad_y0.replace(pos, bad_y0.find('\n', pos) - pos, "y0: 0");
  CHECK(parse_failure([&] { parse_key(bad_y0); }).find("invalid key") != std::string::npos);

  std::string bad_perm = text;
  const auto ppos = bad_perm.find("psi: ");
  bad_perm.replace(ppos, bad_perm.find('\n', ppos) - ppos,
                   "psi: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0");
  CHECK(parse_failure([&] { parse_key(bad_perm); }).find("field 'psi'") != std::string::npos);
}

TEST_CASE("triple round-trip") {
  std::mt19937_64 gen(71);
  const IsotopismTriple t{Permutation(oracle::random_permutation(7, gen)),
                          Permutation(oracle::random_permutation(7, gen)),
                          Permutation(oracle::random_permutation(7, gen))};
  const std::string text = format_triple(t);
  CHECK(parse_triple(text) == t);
  CHECK(format_triple(parse_triple(text)) == text);
  CHECK_THROWS_AS(parse_triple("format: qcipher/1\nkind: triple\na: 0 1\nb: 0\nc: 0 1\n"), Error);
  CHECK(parse_failure([] { parse_triple("format: qcipher/1\nkind: triple\na: 0\nb: 0\n"); }) ==
        "missing field 'c'");
}

TEST_CASE("parse_permutation accepts common spellings") {
  const Permutation p(std::vector<Element>{1, 2, 0});
  CHECK(parse_permutation("1,2,0") == p);
  CHECK(parse_permutation("[1, 2, 0]") == p);
  CHECK(parse_permutation("1 2 0") == p);
  CHECK_THROWS_AS(parse_permutation(""), Error);
  CHECK_THROWS_AS(parse_permutation("1,1,0"), Error);
  CHECK_THROWS_AS(parse_permutation("1,-2,0"), Error);
}

TEST_CASE("files round-trip through disk") {
  const auto dir = std::filesystem::temp_directory_path() / "qcipher_test_io";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "c5.txt").string();
  const std::string text = format_quasigroup(cyclic_group(5));
  write_file(path, text);
  CHECK(read_file(path) == text);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_file(path), Error);
  CHECK_THROWS_AS(write_file((dir / "missing" / "x").string(), "x"), Error);
}
