#include "pg/pregroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pg {

namespace {

void structural_check(const std::vector<std::string>& labels, Elem identity,
                      const std::vector<Elem>& inv, int line = 0) {
  int n = static_cast<int>(labels.size());
  if (n == 0) throw ParseError(line, "empty carrier");
  if (identity < 0 || identity >= n) throw ParseError(line, "identity out of range");
  if (static_cast<int>(inv.size()) != n)
    throw ParseError(line, "inverse map has wrong size");
  for (int i = 0; i < n; ++i) {
    if (labels[i].empty()) throw ParseError(line, "empty element label");
    if (inv[i] < 0 || inv[i] >= n) throw ParseError(line, "inverse out of range");
    if (inv[inv[i]] != i)
      throw ParseError(line, "inverse map is not an involution at '" + labels[i] + "'");
  }
  if (inv[identity] != identity)
    throw ParseError(line, "identity must be its own inverse");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw ParseError(line, "duplicate element '" + *dup + "'");
}

}  // namespace

Pregroup Pregroup::raw(std::string name, std::vector<std::string> labels,
                       Elem identity, std::vector<Elem> inv,
                       std::vector<Elem> table) {
  structural_check(labels, identity, inv);
  int n = static_cast<int>(labels.size());
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw ParseError(0, "table has wrong size");
  for (Elem z : table)
    if (z < -1 || z >= n) throw ParseError(0, "table value out of range");
  Pregroup p;
  p.name_ = std::move(name);
  p.labels_ = std::move(labels);
  p.identity_ = identity;
  p.inv_ = std::move(inv);
  p.table_ = std::move(table);
  p.n_ = n;
  return p;
}

Pregroup Pregroup::make(std::string name, std::vector<std::string> labels,
                        Elem identity, std::vector<Elem> inv,
                        const std::vector<std::array<Elem, 4>>& entries) {
  structural_check(labels, identity, inv);
  int n = static_cast<int>(labels.size());
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, -1);
  auto put = [&](Elem x, Elem y, Elem z, int line) {
    Elem& cell = table[x * n + y];
    if (cell >= 0 && cell != z)
      throw ParseError(line, "conflicting mul entries for (" + labels[x] + ", " +
                                 labels[y] + "): '" + labels[cell] + "' vs '" +
                                 labels[z] + "'");
    cell = z;
  };
  // rows forced by the identity and inverse maps
  for (Elem u = 0; u < n; ++u) {
    put(identity, u, u, 0);
    put(u, identity, u, 0);
    put(u, inv[u], identity, 0);
    put(inv[u], u, identity, 0);
  }
  for (const auto& e : entries) put(e[0], e[1], e[2], e[3]);
  return raw(std::move(name), std::move(labels), identity, std::move(inv),
             std::move(table));
}

std::optional<Elem> Pregroup::element(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t Pregroup::table_entries() const {
  std::size_t k = 0;
  for (Elem z : table_)
    if (z >= 0) ++k;
  return k;
}

Pregroup Pregroup::with_entry(Elem x, Elem y, std::optional<Elem> z) const {
  Pregroup p = *this;
  p.table_[x * n_ + y] = z ? *z : -1;
  return p;
}

Pregroup Pregroup::permuted(const std::vector<int>& new_order) const {
  int n = n_;
  if (static_cast<int>(new_order.size()) != n)
    throw ParseError(0, "permutation has wrong size");
  std::vector<int> pos(n, -1);  // pos[old] = new
  for (int i = 0; i < n; ++i) {
    int o = new_order[i];
    if (o < 0 || o >= n || pos[o] != -1) throw ParseError(0, "not a permutation");
    pos[o] = i;
  }
  std::vector<std::string> labels(n);
  std::vector<Elem> inv(n);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    labels[i] = labels_[new_order[i]];
    inv[i] = pos[inv_[new_order[i]]];
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem z = table_[new_order[x] * n + new_order[y]];
      table[x * n + y] = z < 0 ? -1 : pos[z];
    }
  return raw(name_, std::move(labels), pos[identity_], std::move(inv),
             std::move(table));
}

// ---------------------------------------------------------------- file format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Pregroup Pregroup::parse(std::string_view text) {
  std::string name;
  std::vector<std::string> labels;
  std::map<std::string, Elem> index;
  std::optional<Elem> identity;
  std::map<Elem, std::pair<Elem, int>> inv_decl;  // elem -> (inverse, line)
  std::vector<std::array<Elem, 4>> entries;
  bool started = false, ended = false;
  int lineno = 0, end_line = 0;

  auto lookup = [&](const std::string& tok, int line) -> Elem {
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(line, "unknown name '" + tok + "'");
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (ended) throw ParseError(lineno, "unexpected content after end");
    const std::string& kw = tok[0];
    if (!started) {
      if (kw != "pregroup" || tok.size() != 2)
        throw ParseError(lineno, "expected 'pregroup <name>'");
      name = tok[1];
      started = true;
      continue;
    }
    if (kw == "elements") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (index.count(tok[i]))
          throw ParseError(lineno, "duplicate element '" + tok[i] + "'");
        index[tok[i]] = static_cast<Elem>(labels.size());
        labels.push_back(tok[i]);
      }
    } else if (kw == "identity") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'identity <name>'");
      if (identity) throw ParseError(lineno, "identity redeclared");
      identity = lookup(tok[1], lineno);
    } else if (kw == "inv") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'inv <x> <y>'");
      Elem x = lookup(tok[1], lineno), y = lookup(tok[2], lineno);
      for (auto [e, v] : {std::pair{x, y}, std::pair{y, x}}) {
        auto it = inv_decl.find(e);
        if (it != inv_decl.end() && it->second.first != v)
          throw ParseError(lineno, "conflicting inverse for '" + labels[e] + "'");
        inv_decl[e] = {v, lineno};
      }
    } else if (kw == "mul") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'mul <x> <y> <z>'");
      entries.push_back({lookup(tok[1], lineno), lookup(tok[2], lineno),
                         lookup(tok[3], lineno), lineno});
    } else if (kw == "end") {
      if (tok.size() != 1) throw ParseError(lineno, "expected bare 'end'");
      ended = true;
      end_line = lineno;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!started) throw ParseError(lineno, "missing 'pregroup' header");
  if (!ended) throw ParseError(lineno, "missing 'end'");
  if (!identity) throw ParseError(end_line, "missing identity");

  int n = static_cast<int>(labels.size());
  std::vector<Elem> inv(n, -1);
  for (auto& [e, v] : inv_decl) inv[e] = v.first;
  if (inv[*identity] == -1) inv[*identity] = *identity;
  for (int i = 0; i < n; ++i)
    if (inv[i] == -1)
      throw ParseError(end_line, "missing inverse for '" + labels[i] + "'");

  try {
    return make(std::move(name), std::move(labels), *identity, std::move(inv),
                entries);
  } catch (const ParseError& e) {
    if (e.line > 0) throw;
    throw ParseError(end_line, e.what());
  }
}

std::string Pregroup::serialize() const {
  std::ostringstream out;
  out << "pregroup " << name_ << "\n";
  for (int i = 0; i < n_; ++i)
    out << (i % 16 == 0 ? (i ? "\nelements" : "elements") : "") << ' ' << labels_[i];
  out << "\n";
  out << "identity " << labels_[identity_] << "\n";
  for (int i = 0; i < n_; ++i)
    if (i != identity_ && inv_[i] >= i) out << "inv " << labels_[i] << ' ' << labels_[inv_[i]] << "\n";
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      Elem z = table_[x * n_ + y];
      if (z < 0) continue;
      if (x == identity_ || y == identity_ || y == inv_[x]) continue;  // implied rows
      out << "mul " << labels_[x] << ' ' << labels_[y] << ' ' << labels_[z] << "\n";
    }
  out << "end\n";
  return out.str();
}

// ----------------------------------------------------------------- table scans

std::vector<Elem> bp(const Pregroup& p) {
  std::vector<Elem> out;
  for (Elem b = 0; b < p.size(); ++b) {
    bool all = true;
    for (Elem z = 0; z < p.size() && all; ++z)
      all = p.defined(z, b) && p.defined(b, z);
    if (all) out.push_back(b);
  }
  return out;
}

std::vector<Elem> left_set(const Pregroup& p, Elem x) {
  std::vector<Elem> out;
  for (Elem a = 0; a < p.size(); ++a)
    if (p.defined(a, x)) out.push_back(a);
  return out;
}

bool scan_p6(const Pregroup& p, std::array<Elem, 3>* witness) {
  std::vector<Elem> b = bp(p);
  std::vector<bool> in_bp(p.size(), false);
  for (Elem e : b) in_bp[e] = true;
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y) {
      if (p.defined(x, y)) continue;
      for (Elem a = 0; a < p.size(); ++a)
        if (p.defined(x, a) && p.defined(p.inverse(a), y) && !in_bp[a]) {
          if (witness) *witness = {x, a, y};
          return false;
        }
    }
  return true;
}

bool scan_p6_prime(const Pregroup& p, std::array<Elem, 3>* witness) {
  std::vector<Elem> b = bp(p);
  std::vector<bool> in_bp(p.size(), false);
  for (Elem e : b) in_bp[e] = true;
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y) {
      if (p.defined(x, y)) continue;
      for (Elem a = 0; a < p.size(); ++a) {
        if (!p.defined(a, x)) continue;
        Elem ax = p.product(a, x);
        if (p.defined(ax, y) && !in_bp[ax]) {
          if (witness) *witness = {a, x, y};
          return false;
        }
      }
    }
  return true;
}

}  // namespace pg
