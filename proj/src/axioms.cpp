#include "pg/axioms.hpp"

#include "pg/ball.hpp"
#include "pg/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace pg {

namespace {

const char* kNames[] = {"P1", "P2", "P3", "P4", "P5", "P6", "P6'",
                        "A1", "A2", "A3", "A4", "A5", "H0"};

// x*y*z under some association.
std::optional<Elem> assoc3(const Pregroup& p, Elem x, Elem y, Elem z) {
  if (auto xy = p.try_product(x, y))
    if (auto w = p.try_product(*xy, z)) return w;
  if (auto yz = p.try_product(y, z))
    if (auto w = p.try_product(x, *yz)) return w;
  return std::nullopt;
}

// Left-associated powers base^1, base^2, ... up to the first undefined step
// or repeated value.
std::vector<Elem> power_chain(const Pregroup& p, Elem base) {
  std::vector<Elem> chain{base};
  std::set<Elem> seen{base};
  Elem q = base;
  while (true) {
    auto next = p.try_product(q, base);
    if (!next || seen.count(*next)) break;
    q = *next;
    chain.push_back(q);
    seen.insert(q);
  }
  return chain;
}

std::vector<bool> bp_mask(const Pregroup& p, const std::vector<Elem>& bps) {
  std::vector<bool> in(static_cast<std::size_t>(p.size()), false);
  for (Elem b : bps) in[static_cast<std::size_t>(b)] = true;
  return in;
}

AxiomVerdict fail(Axiom a, std::vector<std::string> witness, std::string note = {}) {
  return AxiomVerdict{a, false, std::move(witness), std::move(note)};
}

AxiomVerdict pass(Axiom a, std::string note = {}) {
  return AxiomVerdict{a, true, {}, std::move(note)};
}

AxiomVerdict check_p1(const Pregroup& p) {
  Elem e = p.identity();
  for (Elem u = 0; u < p.size(); ++u) {
    auto l = p.try_product(e, u), r = p.try_product(u, e);
    if (!l || *l != u || !r || *r != u) return fail(Axiom::P1, {p.label(u)});
  }
  return pass(Axiom::P1);
}

AxiomVerdict check_p2(const Pregroup& p) {
  Elem e = p.identity();
  for (Elem u = 0; u < p.size(); ++u) {
    auto l = p.try_product(p.inverse(u), u), r = p.try_product(u, p.inverse(u));
    if (!l || *l != e || !r || *r != e) return fail(Axiom::P2, {p.label(u)});
  }
  return pass(Axiom::P2);
}

AxiomVerdict check_p3(const Pregroup& p) {
  for (Elem u = 0; u < p.size(); ++u)
    for (Elem v = 0; v < p.size(); ++v) {
      auto uv = p.try_product(u, v);
      if (!uv) continue;
      auto vi_ui = p.try_product(p.inverse(v), p.inverse(u));
      if (!vi_ui || *vi_ui != p.inverse(*uv))
        return fail(Axiom::P3, {p.label(u), p.label(v)});
    }
  return pass(Axiom::P3);
}

AxiomVerdict check_p4(const Pregroup& p) {
  for (Elem u = 0; u < p.size(); ++u)
    for (Elem v = 0; v < p.size(); ++v) {
      auto uv = p.try_product(u, v);
      if (!uv) continue;
      for (Elem w = 0; w < p.size(); ++w) {
        auto vw = p.try_product(v, w);
        if (!vw) continue;
        auto l = p.try_product(*uv, w), r = p.try_product(u, *vw);
        if (l.has_value() != r.has_value() || (l && *l != *r))
          return fail(Axiom::P4, {p.label(u), p.label(v), p.label(w)});
      }
    }
  return pass(Axiom::P4);
}

AxiomVerdict check_p5(const Pregroup& p) {
  for (Elem u = 0; u < p.size(); ++u)
    for (Elem v = 0; v < p.size(); ++v) {
      if (!p.defined(u, v)) continue;
      for (Elem w = 0; w < p.size(); ++w) {
        if (!p.defined(v, w)) continue;
        for (Elem z = 0; z < p.size(); ++z) {
          if (!p.defined(w, z)) continue;
          if (!assoc3(p, u, v, w) && !assoc3(p, v, w, z))
            return fail(Axiom::P5,
                        {p.label(u), p.label(v), p.label(w), p.label(z)});
        }
      }
    }
  return pass(Axiom::P5);
}

AxiomVerdict check_p6(const Pregroup& p) {
  std::array<Elem, 3> w;
  if (scan_p6(p, &w)) return pass(Axiom::P6);
  return fail(Axiom::P6, {p.label(w[0]), p.label(w[1]), p.label(w[2])});
}

AxiomVerdict check_p6p(const Pregroup& p) {
  std::array<Elem, 3> w;
  if (scan_p6_prime(p, &w)) return pass(Axiom::P6p);
  return fail(Axiom::P6p, {p.label(w[0]), p.label(w[1]), p.label(w[2])});
}

AxiomVerdict check_a1(const Pregroup& p) {
  auto bps = bp(p);
  auto in = bp_mask(p, bps);
  for (Elem x = 0; x < p.size(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    for (int sign : {+1, -1}) {
      Elem base = sign > 0 ? x : p.inverse(x);
      auto chain = power_chain(p, base);
      for (std::size_t k = 1; k < chain.size(); ++k)
        if (in[static_cast<std::size_t>(chain[k])])
          return fail(Axiom::A1,
                      {p.label(x), std::to_string(sign * static_cast<int>(k + 1)),
                       p.label(chain[k])});
    }
  }
  return pass(Axiom::A1, "powers iterated to first undefined step or repeat");
}

AxiomVerdict check_a2(const Pregroup& p, const AxiomParams& params) {
  if (params.a2_max_len <= 0 || params.a2_max_exp <= 0)
    throw std::invalid_argument("A2 requires bounds (a2_max_len, a2_max_exp)");
  const int m = params.a2_max_len, amax = params.a2_max_exp;
  Universe u(p);
  const int n = p.size();

  // commute[i][j]: ij = ji in U(P)
  std::vector<std::vector<bool>> commute(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      commute[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          u.equal(word_of({i, j}), word_of({j, i}));

  int best_layer = 0;  // max over violating tuples of min exponent
  std::vector<Elem> best_seq;
  std::vector<int> best_exp;

  std::vector<Elem> seq;
  std::function<void()> scan_exponents = [&]() {
    std::vector<int> exp(seq.size(), 1);
    while (true) {
      std::vector<Elem> factors;
      for (std::size_t i = 0; i < seq.size(); ++i)
        factors.insert(factors.end(), static_cast<std::size_t>(exp[i]), seq[i]);
      Word r = u.reduce(Word(std::move(factors)));
      if (r.size() == 1 && u.in_bp(r.f[0])) {
        int layer = *std::min_element(exp.begin(), exp.end());
        if (layer > best_layer) {
          best_layer = layer;
          best_seq = seq;
          best_exp = exp;
        }
      }
      std::size_t i = 0;
      for (; i < exp.size(); ++i) {
        if (exp[i] < amax) {
          ++exp[i];
          std::fill(exp.begin(), exp.begin() + static_cast<std::ptrdiff_t>(i), 1);
          break;
        }
      }
      if (i == exp.size()) break;
    }
  };
  std::function<void(bool)> grow = [&](bool all_bp) {
    if (!seq.empty() && !all_bp) scan_exponents();
    if (static_cast<int>(seq.size()) >= m) return;
    for (Elem next = 0; next < n; ++next) {
      if (!seq.empty() &&
          commute[static_cast<std::size_t>(seq.back())][static_cast<std::size_t>(next)])
        continue;
      seq.push_back(next);
      grow(all_bp && u.in_bp(next));
      seq.pop_back();
    }
  };
  grow(true);

  std::string bounds = "bounded heuristic: len<=" + std::to_string(m) +
                       ", exp<=" + std::to_string(amax);
  if (best_layer >= amax) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < best_seq.size(); ++i)
      w.push_back(p.label(best_seq[i]) + "^" + std::to_string(best_exp[i]));
    return fail(Axiom::A2, std::move(w),
                bounds + "; product returns to B_P at the exponent cap");
  }
  return pass(Axiom::A2, bounds + "; exponent threshold m=" +
                             std::to_string(best_layer + 1) +
                             " clears every scanned tuple");
}

AxiomVerdict check_a3(const Pregroup& p) {
  auto bps = bp(p);
  Elem e = p.identity();
  for (Elem b : bps) {
    if (b == e) continue;
    auto chain = power_chain(p, b);
    for (std::size_t k = 1; k < chain.size(); ++k)
      if (chain[k] == e)
        return fail(Axiom::A3, {p.label(b), std::to_string(k + 1)},
                    "any nontrivial element of a finite B_P has finite order");
  }
  return pass(Axiom::A3);
}

AxiomVerdict check_a4(const Pregroup& p) {
  auto bps = bp(p);
  auto in = bp_mask(p, bps);
  Elem e = p.identity();
  if (bps.size() <= 1) return pass(Axiom::A4, "B_P = {1}");
  for (Elem x = 0; x < p.size(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    for (Elem a : bps) {
      if (a == e) continue;  // 1's conjugate is trivially in B_P
      auto t = assoc3(p, p.inverse(x), a, x);
      if (t && in[static_cast<std::size_t>(*t)])
        return fail(Axiom::A4, {p.label(x), p.label(a)},
                    "conjugate " + p.label(p.inverse(x)) + "·" + p.label(a) +
                        "·" + p.label(x) + " = " + p.label(*t) +
                        " lies in B_P; a = 1 excluded by design");
    }
  }
  return pass(Axiom::A4, "a = 1 excluded by design");
}

AxiomVerdict check_a5(const Pregroup& p) {
  auto bps = bp(p);
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem a : bps)
      if (!assoc3(p, p.inverse(x), a, x))
        return fail(Axiom::A5, {p.label(x), p.label(a)});
  return pass(Axiom::A5);
}

AxiomVerdict check_h0(const Pregroup& p, const AxiomParams& params) {
  auto bps = bp(p);
  std::string note = "|B_P| = " + std::to_string(bps.size()) + " (finite carrier)";
  if (params.ball) {
    int c0 = 0;
    Elem missing = -1;
    for (Elem b : bps) {
      auto id = params.ball->find_element(b);
      if (!id) {
        missing = b;
        break;
      }
      c0 = std::max(c0, params.ball->dist0(*id));
    }
    if (missing >= 0)
      note += "; C0 unavailable: '" + p.label(missing) + "' outside the ball";
    else
      note += "; C0 = " + std::to_string(c0) + " wrt gens {" +
              params.ball->gens_label() + "}";
  }
  return pass(Axiom::H0, std::move(note));
}

}  // namespace

std::string axiom_name(Axiom a) { return kNames[static_cast<int>(a)]; }

Axiom axiom_from(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "p6p" || s == "p6prime") s = "p6'";
  for (int i = 0; i <= static_cast<int>(Axiom::H0); ++i) {
    std::string t;
    for (char c : std::string_view(kNames[i]))
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == t) return static_cast<Axiom>(i);
  }
  throw std::invalid_argument("unknown axiom tag '" + std::string(name) + "'");
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = {
      Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P4, Axiom::P5, Axiom::P6,
      Axiom::P6p, Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5,
      Axiom::H0};
  return all;
}

const std::vector<Axiom>& p_axioms() {
  static const std::vector<Axiom> ps = {Axiom::P1, Axiom::P2, Axiom::P3,
                                        Axiom::P4, Axiom::P5, Axiom::P6,
                                        Axiom::P6p};
  return ps;
}

AxiomVerdict check_axiom(const Pregroup& p, Axiom which, const AxiomParams& params) {
  switch (which) {
    case Axiom::P1: return check_p1(p);
    case Axiom::P2: return check_p2(p);
    case Axiom::P3: return check_p3(p);
    case Axiom::P4: return check_p4(p);
    case Axiom::P5: return check_p5(p);
    case Axiom::P6: return check_p6(p);
    case Axiom::P6p: return check_p6p(p);
    case Axiom::A1: return check_a1(p);
    case Axiom::A2: return check_a2(p, params);
    case Axiom::A3: return check_a3(p);
    case Axiom::A4: return check_a4(p);
    case Axiom::A5: return check_a5(p);
    case Axiom::H0: return check_h0(p, params);
  }
  throw std::invalid_argument("unknown axiom tag");
}

bool verify_witness(const Pregroup& p, Axiom which,
                    const std::vector<std::string>& witness) {
  auto elem = [&](std::size_t i) -> std::optional<Elem> {
    if (i >= witness.size()) return std::nullopt;
    return p.element(witness[i]);
  };
  auto num = [&](std::size_t i) -> std::optional<int> {
    if (i >= witness.size()) return std::nullopt;
    try {
      return std::stoi(witness[i]);
    } catch (...) {
      return std::nullopt;
    }
  };
  auto bps = bp(p);
  auto in = bp_mask(p, bps);
  auto in_bp = [&](Elem x) { return in[static_cast<std::size_t>(x)]; };
  Elem e = p.identity();

  switch (which) {
    case Axiom::P1: {
      auto u = elem(0);
      if (!u) return false;
      auto l = p.try_product(e, *u), r = p.try_product(*u, e);
      return !l || *l != *u || !r || *r != *u;
    }
    case Axiom::P2: {
      auto u = elem(0);
      if (!u) return false;
      auto l = p.try_product(p.inverse(*u), *u), r = p.try_product(*u, p.inverse(*u));
      return !l || *l != e || !r || *r != e;
    }
    case Axiom::P3: {
      auto u = elem(0), v = elem(1);
      if (!u || !v) return false;
      auto uv = p.try_product(*u, *v);
      if (!uv) return false;
      auto w = p.try_product(p.inverse(*v), p.inverse(*u));
      return !w || *w != p.inverse(*uv);
    }
    case Axiom::P4: {
      auto u = elem(0), v = elem(1), w = elem(2);
      if (!u || !v || !w) return false;
      auto uv = p.try_product(*u, *v), vw = p.try_product(*v, *w);
      if (!uv || !vw) return false;
      auto l = p.try_product(*uv, *w), r = p.try_product(*u, *vw);
      return l.has_value() != r.has_value() || (l && *l != *r);
    }
    case Axiom::P5: {
      auto u = elem(0), v = elem(1), w = elem(2), z = elem(3);
      if (!u || !v || !w || !z) return false;
      if (!p.defined(*u, *v) || !p.defined(*v, *w) || !p.defined(*w, *z))
        return false;
      return !assoc3(p, *u, *v, *w) && !assoc3(p, *v, *w, *z);
    }
    case Axiom::P6: {
      auto x = elem(0), a = elem(1), y = elem(2);
      if (!x || !a || !y) return false;
      return !p.defined(*x, *y) && p.defined(*x, *a) &&
             p.defined(p.inverse(*a), *y) && !in_bp(*a);
    }
    case Axiom::P6p: {
      auto a = elem(0), x = elem(1), y = elem(2);
      if (!a || !x || !y) return false;
      if (p.defined(*x, *y)) return false;
      auto ax = p.try_product(*a, *x);
      return ax && p.defined(*ax, *y) && !in_bp(*ax);
    }
    case Axiom::A1: {
      auto x = elem(0);
      auto n = num(1);
      auto q = elem(2);
      if (!x || !n || !q || *n == 0) return false;
      if (in_bp(*x)) return false;
      Elem base = *n > 0 ? *x : p.inverse(*x);
      int k = std::abs(*n);
      Elem cur = base;
      for (int i = 1; i < k; ++i) {
        auto next = p.try_product(cur, base);
        if (!next) return false;
        cur = *next;
      }
      return cur == *q && in_bp(cur);
    }
    case Axiom::A2: {
      if (witness.empty()) return false;
      std::vector<Elem> factors;
      std::vector<Elem> seq;
      for (const std::string& tok : witness) {
        auto caret = tok.rfind('^');
        if (caret == std::string::npos) return false;
        auto x = p.element(tok.substr(0, caret));
        int a = 0;
        try {
          a = std::stoi(tok.substr(caret + 1));
        } catch (...) {
          return false;
        }
        if (!x || a < 1) return false;
        seq.push_back(*x);
        factors.insert(factors.end(), static_cast<std::size_t>(a), *x);
      }
      bool all_bp = true;
      for (Elem s : seq) all_bp = all_bp && in_bp(s);
      if (all_bp) return false;
      Universe u(p);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (u.equal(word_of({seq[i], seq[i + 1]}), word_of({seq[i + 1], seq[i]})))
          return false;
      Word r = u.reduce(Word(std::move(factors)));
      return r.size() == 1 && u.in_bp(r.f[0]);
    }
    case Axiom::A3: {
      auto b = elem(0);
      auto n = num(1);
      if (!b || !n || *b == e || *n < 1 || !in_bp(*b)) return false;
      Elem cur = *b;
      for (int i = 1; i < *n; ++i) {
        auto next = p.try_product(cur, *b);
        if (!next) return false;
        cur = *next;
      }
      return cur == e;
    }
    case Axiom::A4: {
      auto x = elem(0), a = elem(1);
      if (!x || !a) return false;
      if (in_bp(*x) || !in_bp(*a) || *a == e) return false;
      auto t = assoc3(p, p.inverse(*x), *a, *x);
      return t.has_value() && in_bp(*t);
    }
    case Axiom::A5: {
      auto x = elem(0), a = elem(1);
      if (!x || !a || !in_bp(*a)) return false;
      return !assoc3(p, p.inverse(*x), *a, *x).has_value();
    }
    case Axiom::H0:
      return false;  // cannot fail on a finite carrier
  }
  return false;
}

}  // namespace pg
