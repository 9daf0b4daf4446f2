// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "qcipher/constructions.hpp"
#include "qcipher/crypto.hpp"
#include "qcipher/io.hpp"
#include "qcipher/morphisms.hpp"
#include "qcipher/properties.hpp"

using namespace qcipher;

struct qc_quasigroup {
  Quasigroup q;
  std::optional<ElementSet> sub;
};

struct qc_group {
  AutGroup g;
  std::size_t degree;
};

struct qc_triple {
  IsotopismTriple t;
};

struct qc_key {
  KeyMaterial key;
};

struct qc_ciphertext {
  CipherText ct;
};

namespace {

thread_local std::string last_error;

qc_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return QC_ERR_INVALID_ARGUMENT;
    case Errc::not_latin:
      return QC_ERR_NOT_LATIN;
    case Errc::not_closed:
      return QC_ERR_NOT_CLOSED;
    case Errc::out_of_range:
      return QC_ERR_OUT_OF_RANGE;
    case Errc::precondition:
      return QC_ERR_PRECONDITION;
    case Errc::limit_exceeded:
      return QC_ERR_LIMIT;
    case Errc::parse:
      return QC_ERR_PARSE;
    case Errc::io:
      return QC_ERR_IO;
  }
  return QC_ERR_INTERNAL;
}

qc_status fail(qc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
qc_status guarded(F &&body) {
  try {
    body();
    return QC_OK;
  } catch (const Error &e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(QC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QC_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char *what) {
  if (!condition) throw Error(Errc::invalid_argument, what);
}

Permutation perm_from(const uint32_t *p, size_t size) {
  require(p != nullptr, "null permutation");
  return Permutation(std::vector<Element>(p, p + size));
}

void copy_perm(const Permutation &p, uint32_t *out) {
  std::memcpy(out, p.images().data(), p.size() * sizeof(uint32_t));
}

SQuasigroup make_sq(const qc_quasigroup *q) {
  if (!q->sub) throw Error(Errc::precondition, "quasigroup has no designated sub");
  return SQuasigroup(q->q, *q->sub);
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qc_quasigroup *wrap(QuasigroupDocument doc) {
  return new qc_quasigroup{std::move(doc.q), std::move(doc.sub)};
}

}  // namespace

extern "C" {

const char *qc_last_error(void) { return last_error.c_str(); }

const char *qc_status_name(qc_status status) {
  switch (status) {
    case QC_OK:
      return "ok";
    case QC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QC_ERR_NOT_LATIN:
      return "not latin";
    case QC_ERR_NOT_CLOSED:
      return "not closed";
    case QC_ERR_OUT_OF_RANGE:
      return "out of range";
    case QC_ERR_PRECONDITION:
      return "precondition failed";
    case QC_ERR_LIMIT:
      return "limit exceeded";
    case QC_ERR_PARSE:
      return "parse error";
    case QC_ERR_IO:
      return "i/o error";
    case QC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char *qc_version(void) { return "1.0.0"; }

void qc_string_free(char *s) { std::free(s); }
void qc_bytes_free(uint8_t *bytes) { std::free(bytes); }

qc_status qc_quasigroup_from_table(const uint32_t *table, size_t order,
                                   qc_quasigroup **out) {
  return guarded([&] {
    require(table && out, "null argument");
    require(order > 0, "order must be positive");
    Table t(order, std::vector<Element>(order));
    for (size_t x = 0; x < order; ++x)
      for (size_t y = 0; y < order; ++y) t[x][y] = table[x * order + y];
    *out = new qc_quasigroup{Quasigroup(t), std::nullopt};
  });
}

void qc_quasigroup_free(qc_quasigroup *q) { delete q; }

size_t qc_quasigroup_order(const qc_quasigroup *q) { return q ? q->q.order() : 0; }

qc_status qc_quasigroup_table(const qc_quasigroup *q, uint32_t *table,
                              size_t capacity) {
  return guarded([&] {
    require(q && table, "null argument");
    const size_t m = q->q.order();
    require(capacity >= m * m, "table buffer too small");
    for (Element x = 0; x < m; ++x) {
      auto row = q->q.row(x);
      std::memcpy(table + x * m, row.data(), m * sizeof(uint32_t));
    }
  });
}

qc_status qc_quasigroup_set_sub(qc_quasigroup *q, const uint32_t *sub,
                                size_t len) {
  return guarded([&] {
    require(q && sub, "null argument");
    SQuasigroup sq(q->q, ElementSet(sub, sub + len));
    q->sub = sq.sub();
  });
}

qc_status qc_quasigroup_sub(const qc_quasigroup *q, uint32_t *sub,
                            size_t capacity, size_t *len) {
  return guarded([&] {
    require(q && len, "null argument");
    *len = q->sub ? q->sub->size() : 0;
    if (q->sub && sub)
      std::memcpy(sub, q->sub->data(),
                  std::min(capacity, q->sub->size()) * sizeof(uint32_t));
  });
}

qc_status qc_evaluate(const qc_quasigroup *q, qc_eval_kind kind, uint32_t a,
                      uint32_t b, uint32_t *out) {
  return guarded([&] {
    require(q && out, "null argument");
    require(kind >= QC_PRODUCT && kind <= QC_RIGHT_DIVIDE, "unknown evaluation kind");
    *out = evaluate(q->q, static_cast<EvalKind>(kind), a, b);
  });
}

qc_status qc_identity_element(const qc_quasigroup *q, uint32_t *out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = identity_element(q->q).value_or(UINT32_MAX);
  });
}

qc_status qc_inverse_maps(const qc_quasigroup *q, uint32_t *rho, int *has_rho,
                          uint32_t *lambda, int *has_lambda) {
  return guarded([&] {
    require(q && has_rho && has_lambda, "null argument");
    InverseMaps maps = inverse_maps(q->q);
    *has_rho = maps.rho.has_value();
    *has_lambda = maps.lambda.has_value();
    if (maps.rho && rho) copy_perm(*maps.rho, rho);
    if (maps.lambda && lambda) copy_perm(*maps.lambda, lambda);
  });
}

qc_status qc_isomorphism(const qc_quasigroup *q1, const qc_quasigroup *q2,
                         uint32_t *sigma, int *found) {
  return guarded([&] {
    require(q1 && q2 && found, "null argument");
    auto s = is_isomorphic(q1->q, q2->q);
    *found = s.has_value();
    if (s && sigma) copy_perm(*s, sigma);
  });
}

qc_status qc_load_quasigroup(const char *path, qc_quasigroup **out) {
  return guarded([&] {
    require(path && out, "null argument");
    QuasigroupDocument doc = parse_quasigroup(read_file(path));
    if (doc.sub) doc.sub = SQuasigroup(doc.q, *doc.sub).sub();
    *out = wrap(std::move(doc));
  });
}

qc_status qc_store_quasigroup(const qc_quasigroup *q, const char *path) {
  return guarded([&] {
    require(q && path, "null argument");
    write_file(path, format_quasigroup(q->q, q->sub ? &*q->sub : nullptr));
  });
}

qc_status qc_quasigroup_to_text(const qc_quasigroup *q, char **out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = dup_string(format_quasigroup(q->q, q->sub ? &*q->sub : nullptr));
  });
}

qc_status qc_quasigroup_from_text(const char *text, qc_quasigroup **out) {
  return guarded([&] {
    require(text && out, "null argument");
    QuasigroupDocument doc = parse_quasigroup(text);
    if (doc.sub) doc.sub = SQuasigroup(doc.q, *doc.sub).sub();
    *out = wrap(std::move(doc));
  });
}

qc_status qc_build_cyclic(uint32_t n, qc_quasigroup **out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new qc_quasigroup{cyclic_group(n), std::nullopt};
  });
}

qc_status qc_build_keedwell(uint32_t n, uint32_t r, uint32_t s,
                            qc_quasigroup **out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new qc_quasigroup{keedwell_cipq(KeedwellParams::make(n, r, s)),
                             std::nullopt};
  });
}

qc_status qc_keedwell_check(uint32_t n, uint32_t r, uint32_t s,
                            int *recommended) {
  return guarded([&] {
    require(recommended != nullptr, "null argument");
    *recommended = KeedwellParams::make(n, r, s).recommended();
  });
}

qc_status qc_embed_initial(const qc_quasigroup *p, uint64_t seed, int strict,
                           qc_quasigroup **out) {
  return guarded([&] {
    require(p && out, "null argument");
    SQuasigroup u = embed_as_initial(p->q, seed, strict != 0);
    *out = new qc_quasigroup{u.q(), u.sub()};
  });
}

qc_status qc_holomorph(const qc_quasigroup *q, int smarandache,
                       qc_quasigroup **out) {
  return guarded([&] {
    require(q && out, "null argument");
    if (smarandache) {
      auto [h, tag] = smarandache_holomorph(make_sq(q));
      *out = new qc_quasigroup{h.q(), h.sub()};
    } else {
      auto [h, tag] = holomorph(q->q, automorphism_group(q->q).elements);
      *out = new qc_quasigroup{std::move(h), std::nullopt};
    }
  });
}

qc_status qc_apply_isotopism(const qc_quasigroup *q, const qc_triple *t,
                             qc_quasigroup **out) {
  return guarded([&] {
    require(q && t && out, "null argument");
    *out = new qc_quasigroup{apply_isotopism(q->q, t->t), std::nullopt};
  });
}

qc_status qc_has_property(const qc_quasigroup *q, qc_property prop,
                          int smarandache, int *out) {
  return guarded([&] {
    require(q && out, "null argument");
    require(prop >= QC_PROP_WIP && prop <= QC_PROP_AIP, "unknown property");
    auto kind = static_cast<PropertyKind>(prop);
    *out = smarandache ? is_smarandache_property(make_sq(q), kind)
                       : has_property(q->q, kind);
  });
}

qc_status qc_is_unipotent(const qc_quasigroup *q, int *out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = is_unipotent(q->q);
  });
}

qc_status qc_inverse_cycles(const qc_quasigroup *q, uint32_t *elements,
                            size_t *lengths, size_t *count) {
  return guarded([&] {
    require(q && elements && lengths && count, "null argument");
    CycleDecomposition d = inverse_cycles(q->q);
    size_t at = 0;
    for (size_t i = 0; i < d.cycles.size(); ++i) {
      lengths[i] = d.cycles[i].size();
      for (Element x : d.cycles[i]) elements[at++] = x;
    }
    *count = d.cycles.size();
  });
}

qc_status qc_perm_algebra(qc_perm_op op, const uint32_t *p, const uint32_t *q,
                          size_t size, uint32_t *out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    Permutation pp = perm_from(p, size);
    std::optional<Permutation> qq;
    if (op != QC_PERM_INVERT) qq = perm_from(q, size);
    require(op >= QC_PERM_COMPOSE && op <= QC_PERM_CONJUGATE, "unknown op");
    PermOp kind = op == QC_PERM_COMPOSE  ? PermOp::compose
                  : op == QC_PERM_INVERT ? PermOp::invert
                                         : PermOp::conjugate;
    copy_perm(perm_algebra(kind, pp, qq ? &*qq : nullptr), out);
  });
}

qc_status qc_automorphism_group(const qc_quasigroup *q, int smarandache,
                                size_t max_order, qc_group **out) {
  return guarded([&] {
    require(q && out, "null argument");
    if (max_order == 0) max_order = kAutomorphismSearchCap;
    AutGroup g = smarandache ? smarandache_automorphism_group(make_sq(q), max_order)
                             : automorphism_group(q->q, max_order);
    *out = new qc_group{std::move(g), q->q.order()};
  });
}

void qc_group_free(qc_group *g) { delete g; }
size_t qc_group_size(const qc_group *g) { return g ? g->g.size() : 0; }
size_t qc_group_degree(const qc_group *g) { return g ? g->degree : 0; }

qc_status qc_group_element(const qc_group *g, size_t index, uint32_t *out) {
  return guarded([&] {
    require(g && out, "null argument");
    if (index >= g->g.size()) throw Error(Errc::out_of_range, "group index out of range");
    copy_perm(g->g.elements[index], out);
  });
}

qc_status qc_triple_create(const uint32_t *a, const uint32_t *b,
                           const uint32_t *c, size_t size, qc_triple **out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new qc_triple{{perm_from(a, size), perm_from(b, size), perm_from(c, size)}};
  });
}

void qc_triple_free(qc_triple *t) { delete t; }

qc_status qc_load_triple(const char *path, qc_triple **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qc_triple{parse_triple(read_file(path))};
  });
}

qc_status qc_store_triple(const qc_triple *t, const char *path) {
  return guarded([&] {
    require(t && path, "null argument");
    write_file(path, format_triple(t->t));
  });
}

qc_status qc_is_autotopism(const qc_quasigroup *q, const qc_triple *t,
                           int smarandache, int *out) {
  return guarded([&] {
    require(q && t && out, "null argument");
    if (smarandache) {
      if (!q->sub) throw Error(Errc::precondition, "smarandache check needs a designated sub");
      *out = is_autotopism(q->q, t->t, std::span<const Element>(*q->sub));
    } else {
      *out = is_autotopism(q->q, t->t);
    }
  });
}

qc_status qc_is_s_isotopism(const qc_quasigroup *u, const qc_quasigroup *v,
                            const qc_triple *t, int *out) {
  return guarded([&] {
    require(u && v && t && out, "null argument");
    *out = is_s_isotopism(make_sq(u), make_sq(v), t->t);
  });
}

qc_status qc_transfer_check(const qc_quasigroup *u, const qc_quasigroup *v,
                            const uint32_t *beta, const uint32_t *delta,
                            const uint32_t *gamma, size_t size, int *out) {
  return guarded([&] {
    require(u && v && out, "null argument");
    *out = check_transfer_identity(u->q, v->q, perm_from(beta, size),
                                   perm_from(delta, size), perm_from(gamma, size));
  });
}

qc_status qc_build_v_from_u(const qc_quasigroup *u, const uint32_t *beta,
                            const uint32_t *delta, const uint32_t *gamma,
                            size_t size, qc_quasigroup **v, qc_triple **forward) {
  return guarded([&] {
    require(u && v && forward, "null argument");
    SIsotope iso = build_V_from_U(make_sq(u), perm_from(beta, size),
                                  perm_from(delta, size), perm_from(gamma, size));
    auto *vq = new qc_quasigroup{iso.v.q(), iso.v.sub()};
    *forward = new qc_triple{std::move(iso.forward)};
    *v = vq;
  });
}

qc_status qc_keygen(uint32_t n, uint32_t r, uint32_t s, uint64_t seed,
                    int strict, int allow_unipotent, qc_key **out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    KeygenOptions opt{n, r, s, seed, strict != 0, allow_unipotent != 0};
    *out = new qc_key{keygen(opt)};
  });
}

void qc_key_free(qc_key *key) { delete key; }

qc_status qc_load_key(const char *path, qc_key **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qc_key{parse_key(read_file(path))};
  });
}

qc_status qc_store_key(const qc_key *key, const char *path) {
  return guarded([&] {
    require(key && path, "null argument");
    write_file(path, format_key(key->key));
  });
}

qc_status qc_key_to_text(const qc_key *key, char **out) {
  return guarded([&] {
    require(key && out, "null argument");
    *out = dup_string(format_key(key->key));
  });
}

size_t qc_key_order(const qc_key *key) { return key ? key->key.order() : 0; }
uint32_t qc_key_y0(const qc_key *key) { return key ? key->key.y0 : 0; }
size_t qc_key_period(const qc_key *key) {
  return key ? key->key.schedule_period() : 0;
}
int qc_key_delta_in_saum_v(const qc_key *key) {
  return key ? key->key.delta_in_saum_v : 0;
}
int qc_key_gamma_in_saum_v(const qc_key *key) {
  return key ? key->key.gamma_in_saum_v : 0;
}

qc_status qc_key_rotate(const qc_key *key, int64_t steps, qc_key **out) {
  return guarded([&] {
    require(key && out, "null argument");
    *out = new qc_key{rotate_sub_key(key->key, steps)};
  });
}

qc_status qc_encrypt(const qc_key *key, const uint8_t *data, size_t len,
                     qc_ciphertext **out) {
  return guarded([&] {
    require(key && out && (data || len == 0), "null argument");
    *out = new qc_ciphertext{encrypt(key->key, std::span<const uint8_t>(data, len))};
  });
}

qc_status qc_decrypt(const qc_key *key, const qc_ciphertext *ct, uint8_t **out,
                     size_t *len) {
  return guarded([&] {
    require(key && ct && out && len, "null argument");
    std::vector<uint8_t> bytes = decrypt(key->key, ct->ct);
    auto *buf = static_cast<uint8_t *>(std::malloc(bytes.empty() ? 1 : bytes.size()));
    if (!buf) throw std::bad_alloc();
    if (!bytes.empty()) std::memcpy(buf, bytes.data(), bytes.size());
    *out = buf;
    *len = bytes.size();
  });
}

void qc_ciphertext_free(qc_ciphertext *ct) { delete ct; }
size_t qc_ciphertext_size(const qc_ciphertext *ct) { return ct ? ct->ct.body.size() : 0; }
size_t qc_ciphertext_length(const qc_ciphertext *ct) { return ct ? ct->ct.length : 0; }
const uint32_t *qc_ciphertext_body(const qc_ciphertext *ct) {
  return ct ? ct->ct.body.data() : nullptr;
}

qc_status qc_load_ciphertext(const char *path, qc_ciphertext **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qc_ciphertext{parse_ciphertext(read_file(path))};
  });
}

qc_status qc_store_ciphertext(const qc_ciphertext *ct, const char *path) {
  return guarded([&] {
    require(ct && path, "null argument");
    write_file(path, format_ciphertext(ct->ct));
  });
}

}  // extern "C"
