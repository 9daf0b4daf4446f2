// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through qcipher.h.
//
// Exit status: 0 success, 1 a checked property is false, 2 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcipher.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

void check(qc_status status, const std::string &context) {
  if (status != QC_OK)
    throw Failure{context + ": " + qc_status_name(status) + ": " + qc_last_error()};
}

template <typename T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using QuasigroupPtr =
    std::unique_ptr<qc_quasigroup, Deleter<qc_quasigroup, qc_quasigroup_free>>;
using GroupPtr = std::unique_ptr<qc_group, Deleter<qc_group, qc_group_free>>;
using TriplePtr = std::unique_ptr<qc_triple, Deleter<qc_triple, qc_triple_free>>;
using KeyPtr = std::unique_ptr<qc_key, Deleter<qc_key, qc_key_free>>;
using CipherPtr =
    std::unique_ptr<qc_ciphertext, Deleter<qc_ciphertext, qc_ciphertext_free>>;

QuasigroupPtr load_quasigroup(const std::string &path) {
  qc_quasigroup *q = nullptr;
  check(qc_load_quasigroup(path.c_str(), &q), "loading " + path);
  return QuasigroupPtr(q);
}

std::string to_text(const qc_quasigroup *q) {
  char *s = nullptr;
  check(qc_quasigroup_to_text(q, &s), "formatting");
  std::string out(s);
  qc_string_free(s);
  return out;
}

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{"cannot open '" + out_path + "' for writing"};
  out << text;
}

void emit_quasigroup(const qc_quasigroup *q, const std::string &out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << to_text(q);
  } else {
    check(qc_store_quasigroup(q, out_path.c_str()), "writing " + out_path);
  }
}

std::vector<uint8_t> read_bytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "' for reading"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string join(const uint32_t *values, size_t n, const char *sep) {
  std::ostringstream os;
  for (size_t i = 0; i < n; ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::vector<uint32_t> parse_perm(const std::string &text) {
  std::string cleaned = text;
  for (char &c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream is(cleaned);
  std::vector<uint32_t> out;
  long long v;
  while (is >> v) {
    if (v < 0) throw Failure{"negative entry in permutation '" + text + "'"};
    out.push_back(uint32_t(v));
  }
  if (!is.eof()) throw Failure{"malformed permutation '" + text + "'"};
  if (out.empty()) throw Failure{"empty permutation"};
  return out;
}

struct Options {
  std::string in, out, key, triple, u, v, beta, delta, gamma;
  std::string props = "cip,wip,aip";
  uint32_t n = 0, r = 0, s = 0;
  uint64_t seed = 0;
  size_t max_order = 0;
  bool smarandache = false, strict = false, no_strict = false,
       allow_unipotent = false;
};

int run_build(const std::string &what, const Options &o) {
  qc_quasigroup *q = nullptr;
  if (what == "keedwell") {
    check(qc_build_keedwell(o.n, o.r, o.s, &q), "build keedwell");
    QuasigroupPtr owned(q);
    int recommended = 0;
    check(qc_keedwell_check(o.n, o.r, o.s, &recommended), "build keedwell");
    if (!recommended)
      std::cerr << "note: r + s = 0 (mod n); the result is unipotent\n";
    emit_quasigroup(q, o.out);
  } else if (what == "cyclic") {
    check(qc_build_cyclic(o.n, &q), "build cyclic");
    QuasigroupPtr owned(q);
    emit_quasigroup(q, o.out);
  } else if (what == "embed") {
    auto p = load_quasigroup(o.in);
    check(qc_embed_initial(p.get(), o.seed, o.strict, &q), "build embed");
    QuasigroupPtr owned(q);
    emit_quasigroup(q, o.out);
  } else {
    throw Failure{"unknown construction '" + what + "' (keedwell, cyclic, embed)"};
  }
  return 0;
}

int run_check(const Options &o) {
  auto q = load_quasigroup(o.in);
  static const std::map<std::string, qc_property> names = {
      {"cip", QC_PROP_CIP}, {"wip", QC_PROP_WIP}, {"aip", QC_PROP_AIP}};
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(o.props);
  while (std::getline(is, item, ','))
    if (!item.empty()) parts.push_back(item);
  if (parts.empty()) throw Failure{"no properties requested"};

  bool all = true;
  std::ostringstream line;
  for (size_t i = 0; i < parts.size(); ++i) {
    auto it = names.find(parts[i]);
    if (it == names.end()) throw Failure{"unknown property '" + parts[i] + "'"};
    int value = 0;
    check(qc_has_property(q.get(), it->second, o.smarandache, &value), "check");
    all = all && value;
    line << (i ? ", " : "") << parts[i] << ": " << (value ? "true" : "false");
  }
  std::cout << line.str() << '\n';
  return all ? 0 : kExitFalse;
}

int run_aut(const Options &o) {
  auto q = load_quasigroup(o.in);
  qc_group *g = nullptr;
  check(qc_automorphism_group(q.get(), o.smarandache, o.max_order, &g), "aut");
  GroupPtr owned(g);
  const size_t size = qc_group_size(g), degree = qc_group_degree(g);
  std::cout << "order: " << size << '\n';
  std::vector<uint32_t> buf(degree);
  for (size_t i = 0; i < size; ++i) {
    check(qc_group_element(g, i, buf.data()), "aut");
    std::cout << '[' << join(buf.data(), degree, ",") << "]\n";
  }
  return 0;
}

int run_cycles(const Options &o) {
  auto q = load_quasigroup(o.in);
  const size_t m = qc_quasigroup_order(q.get());
  std::vector<uint32_t> elements(m);
  std::vector<size_t> lengths(m);
  size_t count = 0;
  check(qc_inverse_cycles(q.get(), elements.data(), lengths.data(), &count), "cycles");

  std::ostringstream cycles;
  std::map<size_t, size_t> tally;
  size_t at = 0;
  for (size_t i = 0; i < count; ++i) {
    cycles << (i ? " " : "") << '(' << join(elements.data() + at, lengths[i], " ")
           << ')';
    at += lengths[i];
    ++tally[lengths[i]];
  }
  std::cout << "cycles: " << cycles.str() << '\n' << "lengths: ";
  bool first = true;
  for (auto [len, n] : tally) {
    std::cout << (first ? "" : ", ") << n << "×" << len;
    first = false;
  }
  std::cout << '\n';
  return 0;
}

int run_holomorph(const Options &o) {
  auto q = load_quasigroup(o.in);
  qc_quasigroup *h = nullptr;
  check(qc_holomorph(q.get(), o.smarandache, &h), "holomorph");
  QuasigroupPtr owned(h);
  emit_quasigroup(h, o.out);
  return 0;
}

int run_isotope(const Options &o) {
  auto q = load_quasigroup(o.in);
  qc_triple *t = nullptr;
  check(qc_load_triple(o.triple.c_str(), &t), "loading " + o.triple);
  TriplePtr owned_t(t);
  qc_quasigroup *r = nullptr;
  check(qc_apply_isotopism(q.get(), t, &r), "isotope");
  QuasigroupPtr owned(r);
  emit_quasigroup(r, o.out);
  return 0;
}

int run_keygen(const Options &o) {
  qc_key *k = nullptr;
  check(qc_keygen(o.n, o.r, o.s, o.seed, !o.no_strict, o.allow_unipotent, &k),
        "keygen");
  KeyPtr key(k);
  char *text = nullptr;
  check(qc_key_to_text(k, &text), "keygen");
  std::string body(text);
  qc_string_free(text);
  emit(body, o.out);
  if (!o.out.empty() && o.out != "-")
    std::cout << "key: order " << qc_key_order(k) << ", y0 " << qc_key_y0(k)
              << ", schedule period " << qc_key_period(k)
              << ", delta in SAUM(V) " << (qc_key_delta_in_saum_v(k) ? "yes" : "no")
              << ", gamma in SAUM(V) " << (qc_key_gamma_in_saum_v(k) ? "yes" : "no")
              << '\n';
  return 0;
}

KeyPtr load_key(const std::string &path) {
  qc_key *k = nullptr;
  check(qc_load_key(path.c_str(), &k), "loading " + path);
  return KeyPtr(k);
}

int run_encrypt(const Options &o) {
  auto key = load_key(o.key);
  auto data = read_bytes(o.in);
  qc_ciphertext *ct = nullptr;
  check(qc_encrypt(key.get(), data.data(), data.size(), &ct), "encrypt");
  CipherPtr owned(ct);
  check(qc_store_ciphertext(ct, o.out.c_str()), "writing " + o.out);
  return 0;
}

int run_decrypt(const Options &o) {
  auto key = load_key(o.key);
  qc_ciphertext *ct = nullptr;
  check(qc_load_ciphertext(o.in.c_str(), &ct), "loading " + o.in);
  CipherPtr owned(ct);
  uint8_t *bytes = nullptr;
  size_t len = 0;
  check(qc_decrypt(key.get(), ct, &bytes, &len), "decrypt");
  std::unique_ptr<uint8_t, Deleter<uint8_t, qc_bytes_free>> owned_bytes(bytes);
  std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{"cannot open '" + o.out + "' for writing"};
  out.write(reinterpret_cast<const char *>(bytes), std::streamsize(len));
  return 0;
}

int run_transfer_check(const Options &o) {
  auto u = load_quasigroup(o.u);
  auto v = load_quasigroup(o.v);
  auto beta = parse_perm(o.beta), delta = parse_perm(o.delta),
       gamma = parse_perm(o.gamma);
  if (beta.size() != delta.size() || beta.size() != gamma.size())
    throw Failure{"beta, delta and gamma differ in size"};
  int holds = 0;
  check(qc_transfer_check(u.get(), v.get(), beta.data(), delta.data(),
                          gamma.data(), beta.size(), &holds),
        "transfer-check");
  std::cout << "transfer identity: " << (holds ? "true" : "false") << '\n';
  return holds ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quasigroup constructions, checks and the two-layer cipher"};
  app.require_subcommand(1);
  Options o;
  std::string build_what;

  auto *build = app.add_subcommand("build", "Construct a quasigroup file");
  build->add_option("what", build_what, "keedwell | cyclic | embed")->required();
  build->add_option("--n", o.n, "Order");
  build->add_option("--r", o.r, "Left exponent");
  build->add_option("--s", o.s, "Right exponent");
  build->add_option("--in", o.in, "Input quasigroup (embed)");
  build->add_option("--seed", o.seed, "Random seed (embed)");
  build->add_flag("--strict", o.strict, "Require the embedding to fail global CIP");
  build->add_option("--out", o.out, "Output file (default stdout)");

  auto *chk = app.add_subcommand("check", "Check inverse properties");
  chk->add_option("--in", o.in)->required();
  chk->add_option("--props", o.props, "Comma list of cip, wip, aip");
  chk->add_flag("--smarandache", o.smarandache, "Check the designated sub");

  auto *aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("--in", o.in)->required();
  aut->add_flag("--smarandache", o.smarandache, "Only maps stabilizing the sub");
  aut->add_option("--max-order", o.max_order, "Search cap (default 32)");

  auto *cyc = app.add_subcommand("cycles", "Inverse cycles of rho");
  cyc->add_option("--in", o.in)->required();

  auto *hol = app.add_subcommand("holomorph", "Holomorph over (S)AUM");
  hol->add_option("--in", o.in)->required();
  hol->add_flag("--smarandache", o.smarandache);
  hol->add_option("--out", o.out);

  auto *iso = app.add_subcommand("isotope", "Apply an isotopism triple");
  iso->add_option("--in", o.in)->required();
  iso->add_option("--triple", o.triple)->required();
  iso->add_option("--out", o.out);

  auto *kg = app.add_subcommand("keygen", "Generate a key file");
  kg->add_option("--n", o.n)->required();
  kg->add_option("--r", o.r)->required();
  kg->add_option("--s", o.s)->required();
  kg->add_option("--seed", o.seed)->required();
  kg->add_flag("--no-strict", o.no_strict, "Use the structured embedding");
  kg->add_flag("--allow-unipotent", o.allow_unipotent);
  kg->add_option("--out", o.out);

  auto *enc = app.add_subcommand("encrypt", "Encrypt a file");
  enc->add_option("--key", o.key)->required();
  enc->add_option("--in", o.in)->required();
  enc->add_option("--out", o.out)->required();

  auto *dec = app.add_subcommand("decrypt", "Decrypt a file");
  dec->add_option("--key", o.key)->required();
  dec->add_option("--in", o.in)->required();
  dec->add_option("--out", o.out)->required();

  auto *tc = app.add_subcommand("transfer-check", "Check x.d (x) y.g = (x.b (+) y).d");
  tc->add_option("--u", o.u)->required();
  tc->add_option("--v", o.v)->required();
  tc->add_option("--beta", o.beta)->required();
  tc->add_option("--delta", o.delta)->required();
  tc->add_option("--gamma", o.gamma)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*build) return run_build(build_what, o);
    if (*chk) return run_check(o);
    if (*aut) return run_aut(o);
    if (*cyc) return run_cycles(o);
    if (*hol) return run_holomorph(o);
    if (*iso) return run_isotope(o);
    if (*kg) return run_keygen(o);
    if (*enc) return run_encrypt(o);
    if (*dec) return run_decrypt(o);
    if (*tc) return run_transfer_check(o);
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
