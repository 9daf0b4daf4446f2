// Copyright 2026 The qcipher Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcipher/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace qcipher {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string &what) {
  std::ostringstream os;
  if (line) os << "line " << line << ": ";
  os << what;
  throw Error(Errc::parse, os.str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line,
                         const std::string &field) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_error(line, "field '" + field + "': expected a nonnegative integer, got '" +
                          std::string(tok) + "'");
  return v;
}

std::vector<Element> parse_list(std::string_view value, std::size_t line,
                                const std::string &field) {
  std::vector<Element> out;
  for (auto tok : tokens(value)) {
    std::uint64_t v = parse_uint(tok, line, field);
    if (v > UINT32_MAX) parse_error(line, "field '" + field + "': value too large");
    out.push_back(Element(v));
  }
  return out;
}

struct Field {
  std::size_t line;
  std::string value;
};

struct Document {
  std::string kind;
  std::map<std::string, Field> fields;
  Table table;
  std::size_t table_line = 0;

  const Field &require(const std::string &name) const {
    auto it = fields.find(name);
    if (it == fields.end()) parse_error(0, "missing field '" + name + "'");
    return it->second;
  }
  bool has(const std::string &name) const { return fields.count(name) != 0; }
  std::uint64_t uint(const std::string &name) const {
    const Field &f = require(name);
    auto toks = tokens(f.value);
    if (toks.size() != 1)
      parse_error(f.line, "field '" + name + "': expected one integer");
    return parse_uint(toks[0], f.line, name);
  }
  std::vector<Element> list(const std::string &name) const {
    const Field &f = require(name);
    return parse_list(f.value, f.line, name);
  }
  Permutation perm(const std::string &name) const {
    const Field &f = require(name);
    try {
      return Permutation(parse_list(f.value, f.line, name));
    } catch (const Error &e) {
      if (e.code() == Errc::parse) throw;
      parse_error(f.line, "field '" + name + "': " + e.what());
    }
  }
  void check_known(std::initializer_list<std::string_view> known) const {
    for (const auto &[name, f] : fields) {
      bool ok = false;
      for (auto k : known) ok = ok || k == name;
      if (!ok) parse_error(f.line, "unknown field '" + name + "'");
    }
  }
};

Document parse_document(std::string_view text, std::string_view expected_kind) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  Document doc;
  bool seen_format = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      parse_error(lineno, "expected 'name: value'");
    std::string name(trim(line.substr(0, colon)));
    std::string value(trim(line.substr(colon + 1)));

    if (!seen_format) {
      if (name != "format" || value != kFormatTag)
        parse_error(lineno, "first line must be 'format: " +
                                std::string(kFormatTag) + "'");
      seen_format = true;
      continue;
    }
    if (name == "format") parse_error(lineno, "duplicate format header");
    if (name == "kind") {
      if (!doc.kind.empty()) parse_error(lineno, "duplicate field 'kind'");
      doc.kind = value;
      continue;
    }
    if (doc.fields.count(name)) parse_error(lineno, "duplicate field '" + name + "'");

    if (name == "table") {
      if (!value.empty()) parse_error(lineno, "table rows start on the next line");
      auto order_it = doc.fields.find("order");
      if (order_it == doc.fields.end())
        parse_error(lineno, "'order' must precede 'table'");
      std::uint64_t order = doc.uint("order");
      if (order == 0 || order > 4096) parse_error(order_it->second.line, "order out of range");
      doc.table_line = lineno;
      for (std::uint64_t r = 0; r < order; ++r) {
        ++i;
        if (i >= lines.size() || trim(lines[i]).empty())
          parse_error(lineno, "table ends after " + std::to_string(r) + " of " +
                                  std::to_string(order) + " rows");
        auto row = parse_list(lines[i], i + 1, "table");
        if (row.size() != order)
          parse_error(i + 1, "table row " + std::to_string(r) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(order));
        doc.table.push_back(std::move(row));
      }
    }
    doc.fields.emplace(name, Field{lineno, value});
  }
  if (!seen_format)
    parse_error(0, "missing 'format: " + std::string(kFormatTag) + "' header");
  if (doc.kind.empty()) parse_error(0, "missing field 'kind'");
  if (doc.kind != expected_kind)
    parse_error(0, "expected kind '" + std::string(expected_kind) + "', found '" +
                       doc.kind + "'");
  return doc;
}

Quasigroup document_table(const Document &doc) {
  doc.require("table");
  std::vector<std::string> labels;
  if (doc.has("labels")) {
    for (auto tok : tokens(doc.require("labels").value)) labels.emplace_back(tok);
    if (labels.size() != doc.table.size())
      parse_error(doc.require("labels").line, "label count does not match order");
  }
  try {
    return Quasigroup(doc.table, std::move(labels));
  } catch (const Error &e) {
    if (e.code() == Errc::not_latin) {
      std::ostringstream os;
      os << "table (line " << doc.table_line << "): " << e.what();
      throw Error(Errc::not_latin, os.str());
    }
    throw;
  }
}

void put_list(std::ostringstream &os, std::string_view name,
              std::span<const Element> values) {
  os << name << ':';
  for (Element v : values) os << ' ' << v;
  os << '\n';
}

void put_table(std::ostringstream &os, const Quasigroup &q) {
  os << "order: " << q.order() << '\n';
  if (!q.labels().empty()) {
    os << "labels:";
    for (const auto &l : q.labels()) os << ' ' << l;
    os << '\n';
  }
}

void put_rows(std::ostringstream &os, const Quasigroup &q) {
  os << "table:\n";
  for (Element x = 0; x < q.order(); ++x) {
    auto row = q.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) os << (y ? " " : "") << row[y];
    os << '\n';
  }
}

void put_header(std::ostringstream &os, std::string_view kind) {
  os << "format: " << kFormatTag << '\n' << "kind: " << kind << '\n';
}

}  // namespace

std::string format_quasigroup(const Quasigroup &q, const ElementSet *sub) {
  for (const auto &l : q.labels())
    if (l.empty() || tokens(l).size() != 1)
      throw Error(Errc::invalid_argument, "labels must be nonempty and free of whitespace");
  std::ostringstream os;
  put_header(os, "quasigroup");
  put_table(os, q);
  if (sub) put_list(os, "sub", *sub);
  put_rows(os, q);
  return os.str();
}

std::string format_squasigroup(const SQuasigroup &sq) {
  return format_quasigroup(sq.q(), &sq.sub());
}

QuasigroupDocument parse_quasigroup(std::string_view text) {
  Document doc = parse_document(text, "quasigroup");
  doc.check_known({"order", "labels", "sub", "table"});
  QuasigroupDocument out{document_table(doc), std::nullopt};
  if (doc.has("sub")) out.sub = doc.list("sub");
  return out;
}

SQuasigroup parse_squasigroup(std::string_view text) {
  QuasigroupDocument doc = parse_quasigroup(text);
  if (!doc.sub) parse_error(0, "missing field 'sub'");
  return SQuasigroup(std::move(doc.q), std::move(*doc.sub));
}

std::string format_key(const KeyMaterial &key) {
  std::ostringstream os;
  put_header(os, "key");
  os << "n: " << key.params.n << '\n'
     << "r: " << key.params.r << '\n'
     << "s: " << key.params.s << '\n';
  put_table(os, key.u.q());
  put_list(os, "sub", key.u.sub());
  put_rows(os, key.u.q());
  put_list(os, "phi", key.phi.images());
  put_list(os, "alpha", key.alpha.images());
  put_list(os, "beta", key.beta.images());
  put_list(os, "psi", key.psi.images());
  put_list(os, "gamma", key.gamma.images());
  put_list(os, "delta", key.delta.images());
  os << "y0: " << key.y0 << '\n';
  put_list(os, "triple_a", key.triple.a.images());
  put_list(os, "triple_b", key.triple.b.images());
  put_list(os, "triple_c", key.triple.c.images());
  return os.str();
}

KeyMaterial parse_key(std::string_view text) {
  Document doc = parse_document(text, "key");
  doc.check_known({"n", "r", "s", "order", "labels", "sub", "table", "phi",
                   "alpha", "beta", "psi", "gamma", "delta", "y0", "triple_a",
                   "triple_b", "triple_c"});
  // Require everything up front so a missing field is named before any
  // semantic check runs.
  for (const char *name : {"n", "r", "s", "order", "sub", "table", "phi", "alpha",
                           "beta", "psi", "gamma", "delta", "y0", "triple_a",
                           "triple_b", "triple_c"})
    doc.require(name);

  auto narrow = [&](const char *name) {
    std::uint64_t v = doc.uint(name);
    if (v > UINT32_MAX) parse_error(doc.require(name).line, "value too large");
    return std::uint32_t(v);
  };
  KeedwellParams params{narrow("n"), narrow("r"), narrow("s")};
  SQuasigroup u(document_table(doc), doc.list("sub"));
  return assemble_key(params, std::move(u), doc.perm("phi"), doc.perm("alpha"),
                      doc.perm("beta"), doc.perm("psi"), doc.perm("gamma"),
                      doc.perm("delta"),
                      IsotopismTriple{doc.perm("triple_a"), doc.perm("triple_b"),
                                      doc.perm("triple_c")},
                      narrow("y0"));
}

std::string format_ciphertext(const CipherText &ct) {
  std::ostringstream os;
  put_header(os, "ciphertext");
  os << "length: " << ct.length << '\n';
  put_list(os, "body", ct.body);
  return os.str();
}

CipherText parse_ciphertext(std::string_view text) {
  Document doc = parse_document(text, "ciphertext");
  doc.check_known({"length", "body"});
  CipherText ct;
  ct.length = doc.uint("length");
  ct.body = doc.list("body");
  return ct;
}

std::string format_triple(const IsotopismTriple &t) {
  std::ostringstream os;
  put_header(os, "triple");
  put_list(os, "a", t.a.images());
  put_list(os, "b", t.b.images());
  put_list(os, "c", t.c.images());
  return os.str();
}

IsotopismTriple parse_triple(std::string_view text) {
  Document doc = parse_document(text, "triple");
  doc.check_known({"a", "b", "c"});
  IsotopismTriple t{doc.perm("a"), doc.perm("b"), doc.perm("c")};
  if (t.a.size() != t.b.size() || t.a.size() != t.c.size())
    parse_error(0, "triple components differ in size");
  return t;
}

Permutation parse_permutation(std::string_view text) {
  std::string cleaned(text);
  for (char &c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  auto values = parse_list(cleaned, 0, "permutation");
  if (values.empty()) parse_error(0, "empty permutation");
  return Permutation(std::move(values));
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot open '" + path + "' for writing");
  out.write(contents.data(), std::streamsize(contents.size()));
  if (!out) throw Error(Errc::io, "write to '" + path + "' failed");
}

}  // namespace qcipher
