// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/crypto.hpp"

#include <algorithm>
#include <sstream>

#include "qcipher/properties.hpp"
#include "qcipher/random.hpp"

namespace qcipher {

std::size_t KeyMaterial::schedule_period() const {
  std::size_t len = 1;
  for (Element y = rho[y0]; y != y0; y = rho[y]) ++len;
  return len;
}

namespace {

bool in_saum(const SQuasigroup &sq, const Permutation &p) {
  return p.size() == sq.q().order() && p.stabilizes(sq.sub()) &&
         is_automorphism(sq.q(), p);
}

[[noreturn]] void bad_key(const std::string &what) {
  throw Error(Errc::precondition, "invalid key: " + what);
}

}  // namespace

KeyMaterial assemble_key(KeedwellParams params, SQuasigroup u, Permutation phi,
                         Permutation alpha, Permutation beta, Permutation psi,
                         Permutation gamma, Permutation delta,
                         IsotopismTriple triple, Element y0) {
  params = KeedwellParams::make(params.n, params.r, params.s);
  const ElementSet &sub = u.sub();
  if (sub.size() != params.n) bad_key("sub size differs from n");
  if (phi.size() != params.n) bad_key("phi must act on the sub positions");

  const Quasigroup sub_q = induced_subquasigroup(u.q(), sub);
  const Quasigroup keedwell = keedwell_cipq(params);
  for (Element i = 0; i < params.n; ++i)
    for (Element j = 0; j < params.n; ++j)
      if (keedwell.product(phi[i], phi[j]) != phi[sub_q.product(i, j)])
        bad_key("phi is not an isomorphism onto the Keedwell table");

  const std::size_t m = u.q().order();
  for (const Permutation *p : {&alpha, &beta, &psi, &gamma, &delta})
    if (p->size() != m) bad_key("permutation size differs from order");
  if (!in_saum(u, alpha) || alpha.is_identity())
    bad_key("alpha must be a nontrivial Smarandache automorphism of U");
  if (!in_saum(u, beta) || beta.is_identity())
    bad_key("beta must be a nontrivial Smarandache automorphism of U");
  if (!psi.stabilizes(sub)) bad_key("psi must map the sub onto itself");
  if (gamma != alpha.conjugated_by(psi)) bad_key("gamma != psi^-1 alpha psi");
  if (delta != beta.conjugated_by(psi)) bad_key("delta != psi^-1 beta psi");

  SIsotope iso = build_V_from_U(u, beta, delta, gamma);
  if (iso.forward != triple) bad_key("recorded triple does not match");

  auto sub_rho = inverse_maps(sub_q).rho;
  if (!sub_rho) bad_key("sub has no crossed inverse map");
  std::vector<Element> rho(m);
  for (Element x = 0; x < m; ++x) rho[x] = x;
  for (std::size_t i = 0; i < sub.size(); ++i) rho[sub[i]] = sub[(*sub_rho)[Element(i)]];

  if (!u.in_sub(y0)) bad_key("y0 must lie in the sub");
  if (rho[y0] == y0) bad_key("y0 is a fixed point of rho");

  const bool delta_in = in_saum(iso.v, delta);
  const bool gamma_in = in_saum(iso.v, gamma);
  return KeyMaterial{params,
                     std::move(u),
                     std::move(iso.v),
                     std::move(phi),
                     std::move(alpha),
                     std::move(beta),
                     std::move(psi),
                     std::move(gamma),
                     std::move(delta),
                     std::move(triple),
                     Permutation(std::move(rho)),
                     y0,
                     delta_in,
                     gamma_in};
}

KeyMaterial keygen(const KeygenOptions &opt) {
  const KeedwellParams params = KeedwellParams::make(opt.n, opt.r, opt.s);
  if (!params.recommended() && !opt.allow_unipotent) {
    std::ostringstream os;
    os << "r + s = " << params.r + params.s << " is 0 mod n = " << params.n
       << ": the cross-inverse quasigroup is unipotent (rs = n+1 and r+s != n "
          "is required)";
    throw Error(Errc::precondition, os.str());
  }
  const Quasigroup keedwell = keedwell_cipq(params);
  Rng rng(opt.seed);

  std::optional<SQuasigroup> u;
  AutGroup saum;
  for (int attempt = 0; attempt < kKeygenEmbeddingAttempts; ++attempt) {
    u = embed_as_initial(keedwell, rng.next(), opt.strict_initial);
    saum = smarandache_automorphism_group(*u, kKeygenAutomorphismCap);
    if (!saum.is_trivial()) break;
  }
  if (saum.is_trivial())
    throw Error(Errc::precondition,
                "Smarandache automorphism group of U is trivial after retries");

  std::vector<Permutation> nontrivial;
  for (const auto &p : saum.elements)
    if (!p.is_identity()) nontrivial.push_back(p);
  Permutation alpha = nontrivial[rng.below(nontrivial.size())];
  Permutation beta = nontrivial[rng.below(nontrivial.size())];

  const std::size_t m = u->q().order();
  std::vector<Element> inside, outside;
  for (Element x = 0; x < m; ++x) (u->in_sub(x) ? inside : outside).push_back(x);
  std::vector<Element> inside_img = inside, outside_img = outside;
  rng.shuffle(std::span<Element>(inside_img));
  rng.shuffle(std::span<Element>(outside_img));
  std::vector<Element> psi_images(m);
  for (std::size_t i = 0; i < inside.size(); ++i) psi_images[inside[i]] = inside_img[i];
  for (std::size_t i = 0; i < outside.size(); ++i) psi_images[outside[i]] = outside_img[i];
  Permutation psi(std::move(psi_images));

  Permutation gamma = alpha.conjugated_by(psi);
  Permutation delta = beta.conjugated_by(psi);
  IsotopismTriple triple = build_V_from_U(*u, beta, delta, gamma).forward;

  auto sub_rho = inverse_maps(induced_subquasigroup(u->q(), u->sub())).rho;
  if (!sub_rho) throw Error(Errc::precondition, "sub has no crossed inverse map");
  std::vector<Element> movable;
  for (std::size_t i = 0; i < u->sub().size(); ++i)
    if ((*sub_rho)[Element(i)] != i) movable.push_back(u->sub()[i]);
  if (movable.empty())
    throw Error(Errc::precondition, "rho fixes every sub element; no key cycle");
  Element y0 = movable[rng.below(movable.size())];

  return assemble_key(params, std::move(*u), Permutation::identity(params.n),
                      std::move(alpha), std::move(beta), std::move(psi),
                      std::move(gamma), std::move(delta), std::move(triple), y0);
}

namespace {

// Largest power of radix that fits in 32 bits, with its exponent.
std::pair<std::uint64_t, unsigned> chunk_base(std::uint32_t radix) {
  std::uint64_t base = radix;
  unsigned exp = 1;
  while (base * radix <= UINT32_MAX) {
    base *= radix;
    ++exp;
  }
  return {base, exp};
}

}  // namespace

EncodedMessage encode_bytes(std::span<const std::uint8_t> data,
                            std::uint32_t radix) {
  if (radix < 2) throw Error(Errc::invalid_argument, "radix must be >= 2");
  EncodedMessage out;
  out.length = data.size();
  if (data.empty()) return out;

  // Big-endian 32-bit limbs.
  std::vector<std::uint32_t> limbs((data.size() + 3) / 4, 0);
  const std::size_t pad = limbs.size() * 4 - data.size();
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::size_t pos = i + pad;
    limbs[pos / 4] |= std::uint32_t(data[i]) << (8 * (3 - pos % 4));
  }

  const auto [base, exp] = chunk_base(radix);
  std::vector<std::uint32_t> reversed;
  std::size_t first = 0;
  auto skip_zeros = [&] {
    while (first < limbs.size() && limbs[first] == 0) ++first;
  };
  skip_zeros();
  while (first < limbs.size()) {
    std::uint64_t rem = 0;
    for (std::size_t i = first; i < limbs.size(); ++i) {
      std::uint64_t cur = (rem << 32) | limbs[i];
      limbs[i] = std::uint32_t(cur / base);
      rem = cur % base;
    }
    skip_zeros();
    for (unsigned d = 0; d < exp; ++d) {
      reversed.push_back(std::uint32_t(rem % radix));
      rem /= radix;
    }
  }
  while (!reversed.empty() && reversed.back() == 0) reversed.pop_back();
  if (reversed.empty()) reversed.push_back(0);
  out.digits.assign(reversed.rbegin(), reversed.rend());
  return out;
}

std::vector<std::uint8_t> decode_bytes(std::span<const std::uint32_t> digits,
                                       std::uint32_t radix, std::size_t length) {
  if (radix < 2) throw Error(Errc::invalid_argument, "radix must be >= 2");
  if (digits.empty()) {
    if (length != 0)
      throw Error(Errc::parse, "no digits for a nonempty message");
    return {};
  }
  const auto [base, exp] = chunk_base(radix);

  // Little-endian 32-bit limbs.
  std::vector<std::uint32_t> limbs;
  auto mul_add = [&](std::uint64_t mul, std::uint64_t add) {
    std::uint64_t carry = add;
    for (auto &limb : limbs) {
      std::uint64_t cur = std::uint64_t(limb) * mul + carry;
      limb = std::uint32_t(cur);
      carry = cur >> 32;
    }
    if (carry) limbs.push_back(std::uint32_t(carry));
  };

  std::size_t i = 0;
  std::size_t group = digits.size() % exp;
  if (group == 0) group = exp;
  while (i < digits.size()) {
    std::uint64_t value = 0, mul = 1;
    for (std::size_t k = 0; k < group; ++k, ++i) {
      if (digits[i] >= radix)
        throw Error(Errc::out_of_range, "digit exceeds radix");
      value = value * radix + digits[i];
      mul *= radix;
    }
    mul_add(mul, value);
    group = exp;
  }
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
  std::size_t significant = 0;
  if (!limbs.empty()) {
    significant = (limbs.size() - 1) * 4;
    for (std::uint32_t top = limbs.back(); top; top >>= 8) ++significant;
  }
  if (significant > length)
    throw Error(Errc::out_of_range, "decoded value exceeds the declared length");

  std::vector<std::uint8_t> out(length, 0);
  for (std::size_t b = 0; b < length; ++b) {
    std::size_t limb = b / 4;
    if (limb >= limbs.size()) break;
    out[length - 1 - b] = std::uint8_t(limbs[limb] >> (8 * (b % 4)));
  }
  return out;
}

CipherText encrypt(const KeyMaterial &key, std::span<const std::uint8_t> data,
                   Layers layers) {
  const EncodedMessage msg = encode_bytes(data, std::uint32_t(key.sub_size()));
  const Permutation phi_inv = key.phi.inverse();
  const Quasigroup &u = key.u.q();
  CipherText ct;
  ct.length = msg.length;
  ct.body.reserve(msg.digits.size());
  Element y = key.y0;
  for (std::uint32_t digit : msg.digits) {
    Element m = key.u.sub()[phi_inv[digit]];
    Element c = u.product(y, m);
    ct.body.push_back(layers == Layers::both ? key.triple.c[c] : c);
    y = key.rho[y];
  }
  return ct;
}

std::vector<std::uint8_t> decrypt(const KeyMaterial &key, const CipherText &ct) {
  const Permutation c_inv = key.triple.c.inverse();
  const Quasigroup &u = key.u.q();
  std::vector<std::uint32_t> digits;
  digits.reserve(ct.body.size());
  Element y = key.y0;
  for (Element d : ct.body) {
    if (d >= key.order())
      throw Error(Errc::out_of_range, "ciphertext element out of range");
    Element c = c_inv[d];
    if (!key.u.in_sub(c))
      throw Error(Errc::out_of_range, "ciphertext element decodes outside the sub");
    Element m = u.product(c, key.rho[y]);
    auto pos = key.u.sub_position(m);
    if (!pos) throw Error(Errc::out_of_range, "decoded digit outside the sub");
    digits.push_back(key.phi[Element(*pos)]);
    y = key.rho[y];
  }
  return decode_bytes(digits, std::uint32_t(key.sub_size()), ct.length);
}

KeyMaterial rotate_sub_key(const KeyMaterial &key, std::int64_t steps) {
  const auto period = std::int64_t(key.schedule_period());
  std::int64_t k = ((steps % period) + period) % period;
  KeyMaterial out = key;
  for (std::int64_t i = 0; i < k; ++i) out.y0 = out.rho[out.y0];
  return out;
}

}  // namespace qcipher
