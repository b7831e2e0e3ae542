#include "pg/words.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace pg {

namespace {

// Replace (w[i], w[i+1]) by z.
void splice(std::vector<Elem>& w, std::size_t i, Elem z) {
  w[i] = z;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
}

}  // namespace

Universe::Universe(Pregroup p) : p_(std::move(p)) {
  bp_ = pg::bp(p_);
  in_bp_.assign(static_cast<std::size_t>(p_.size()), false);
  for (Elem b : bp_) in_bp_[static_cast<std::size_t>(b)] = true;
  p6_ = scan_p6(p_);
  tree_ = order_tree(p_);
  try {
    tree_dist_ = tree_distances(tree_);
  } catch (const TreeError& e) {
    tree_err_ = e.what();
  }
  if (p6_) {
    cands_ = bp_;
  } else {
    cands_.resize(static_cast<std::size_t>(p_.size()));
    std::iota(cands_.begin(), cands_.end(), 0);
  }
}

const std::vector<Elem>& Universe::candidates() const { return cands_; }

bool Universe::is_reduced(const Word& w) const {
  if (w.f.empty()) throw std::invalid_argument("empty word");
  for (std::size_t i = 0; i + 1 < w.f.size(); ++i)
    if (p_.defined(w.f[i], w.f[i + 1])) return false;
  return true;
}

Word Universe::reduce(const Word& w, Strategy s, std::uint64_t seed) const {
  std::vector<Elem> v = w.f;
  if (v.empty()) throw std::invalid_argument("empty word");
  switch (s) {
    case Strategy::leftmost: {
      std::size_t i = 0;
      while (v.size() > 1 && i + 1 < v.size()) {
        if (auto z = p_.try_product(v[i], v[i + 1])) {
          splice(v, i, *z);
          if (i > 0) --i;  // the merged factor may combine leftward
        } else {
          ++i;
        }
      }
      break;
    }
    case Strategy::rightmost: {
      int j = static_cast<int>(v.size()) - 2;
      while (v.size() > 1 && j >= 0) {
        auto ju = static_cast<std::size_t>(j);
        if (auto z = p_.try_product(v[ju], v[ju + 1])) {
          splice(v, ju, *z);
          j = std::min(j, static_cast<int>(v.size()) - 2);
        } else {
          --j;
        }
      }
      break;
    }
    case Strategy::random: {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
      std::vector<std::size_t> hits;
      while (v.size() > 1) {
        hits.clear();
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
          if (p_.defined(v[k], v[k + 1])) hits.push_back(k);
        if (hits.empty()) break;
        std::size_t k = hits[rng() % hits.size()];
        splice(v, k, p_.product(v[k], v[k + 1]));
      }
      break;
    }
  }
  return Word(std::move(v));
}

Word Universe::multiply(const Word& u, const Word& v) const {
  std::vector<Elem> cat = u.f;
  cat.insert(cat.end(), v.f.begin(), v.f.end());
  return reduce(Word(std::move(cat)));
}

Word Universe::invert(const Word& u) const {
  std::vector<Elem> out(u.f.rbegin(), u.f.rend());
  for (Elem& x : out) x = p_.inverse(x);
  return Word(std::move(out));
}

std::optional<Elem> Universe::triple(Elem x, Elem y, Elem z) const {
  if (auto xy = p_.try_product(x, y))
    if (auto w = p_.try_product(*xy, z)) return w;
  if (auto yz = p_.try_product(y, z))
    if (auto w = p_.try_product(x, *yz)) return w;
  return std::nullopt;
}

std::optional<Interleaver> Universe::equivalent(const Word& u, const Word& v) const {
  if (!is_reduced(u) || !is_reduced(v))
    throw std::invalid_argument("equivalent: inputs must be reduced");
  const std::size_t n = u.size();
  if (v.size() != n) return std::nullopt;
  if (n == 1) {
    if (u.f[0] == v.f[0]) return Interleaver{};
    return std::nullopt;
  }
  std::vector<Elem> a(n - 1, -1);
  std::function<bool(std::size_t, Elem)> go = [&](std::size_t i, Elem prev) {
    if (i == n) {
      auto last = p_.try_product(p_.inverse(prev), u.f[n - 1]);
      return last.has_value() && *last == v.f[n - 1];
    }
    for (Elem cand : candidates()) {
      auto w = triple(p_.inverse(prev), u.f[i - 1], cand);
      if (!w || *w != v.f[i - 1]) continue;
      a[i - 1] = cand;
      if (go(i + 1, cand)) return true;
    }
    return false;
  };
  if (go(1, p_.identity())) return Interleaver{std::move(a)};
  return std::nullopt;
}

std::vector<Word> Universe::enumerate_class(const Word& u, std::size_t cap) const {
  if (!is_reduced(u))
    throw std::invalid_argument("enumerate_class: input must be reduced");
  const std::size_t n = u.size();
  std::set<Word> out;
  out.insert(u);
  if (n == 1) return {u};
  std::vector<Elem> cur(n);
  std::size_t nodes = 0;
  std::function<void(std::size_t, Elem)> go = [&](std::size_t i, Elem prev) {
    if (++nodes > cap)
      throw std::runtime_error("class enumeration budget exceeded");
    if (i == n) {
      auto last = p_.try_product(p_.inverse(prev), u.f[n - 1]);
      if (!last) return;
      if (p_.defined(cur[n - 2], *last)) return;  // keep members reduced
      cur[n - 1] = *last;
      out.insert(Word(cur));
      return;
    }
    for (Elem cand : candidates()) {
      auto w = triple(p_.inverse(prev), u.f[i - 1], cand);
      if (!w) continue;
      if (i >= 2 && p_.defined(cur[i - 2], *w)) continue;
      cur[i - 1] = *w;
      go(i + 1, cand);
    }
  };
  go(1, p_.identity());
  return std::vector<Word>(out.begin(), out.end());
}

Word Universe::canonical(const Word& u) const {
  return enumerate_class(u).front();
}

bool Universe::equal(const Word& u, const Word& v) const {
  Word ru = reduce(u), rv = reduce(v);
  if (ru.size() != rv.size()) return false;
  return canonical(ru) == canonical(rv);
}

int Universe::chiswell_length(const Word& w) const {
  if (!is_reduced(w))
    throw std::invalid_argument("chiswell_length: input must be reduced");
  if (w.size() > 1) return static_cast<int>(w.size());
  return in_bp(w.f[0]) ? 0 : 1;
}

long Universe::tree_length(const Word& w) const {
  if (!is_reduced(w))
    throw std::invalid_argument("tree_length: input must be reduced");
  if (tree_dist_.empty()) throw TreeError(tree_err_);
  long total = 0;
  Elem prev = p_.identity();
  for (std::size_t i = 0; i <= w.size(); ++i) {
    Elem xi = i < w.size() ? w.f[i] : p_.identity();
    auto ci = static_cast<std::size_t>(tree_.class_of[static_cast<std::size_t>(p_.inverse(prev))]);
    auto cj = static_cast<std::size_t>(tree_.class_of[static_cast<std::size_t>(xi)]);
    total += tree_dist_[ci][cj];
    prev = xi;
  }
  return total;
}

std::vector<Word> Universe::enumerate_elements(int max_len, std::size_t budget) const {
  std::set<Word> out;
  for (Elem x = 0; x < p_.size(); ++x) {
    Word w = word_of({x});
    if (chiswell_length(w) <= max_len) out.insert(w);
  }
  std::size_t nodes = 0;
  std::vector<Elem> cur;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (Elem next = 0; next < p_.size(); ++next) {
      if (p_.defined(cur.back(), next)) continue;
      if (++nodes > 50'000'000)
        throw std::runtime_error("enumeration budget exceeded (search nodes)");
      cur.push_back(next);
      out.insert(canonical(Word(cur)));
      if (out.size() > budget)
        throw std::runtime_error("enumeration budget exceeded");
      grow();
      cur.pop_back();
    }
  };
  if (max_len >= 2) {
    for (Elem first = 0; first < p_.size(); ++first) {
      cur.assign(1, first);
      grow();
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

LyndonReport Universe::lyndon_probe(const std::vector<Word>& sample,
                                    std::size_t max_issues) const {
  LyndonReport rep;
  auto push = [&](LyndonIssue iss) {
    if (rep.issues.size() < max_issues) rep.issues.push_back(std::move(iss));
  };

  std::set<Word> closure;
  closure.insert(word_of({p_.identity()}));
  for (const Word& w : sample) {
    Word r = reduce(w);
    closure.insert(r);
    closure.insert(reduce(invert(r)));
  }
  std::vector<Word> gs(closure.begin(), closure.end());
  const std::size_t nn = gs.size();

  if (chiswell_length(word_of({p_.identity()})) != 0)
    push({"l(1)=0", word_of({p_.identity()}), Word{}, Word{},
          2L * chiswell_length(word_of({p_.identity()}))});

  std::vector<int> len(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    len[i] = chiswell_length(gs[i]);
    int li = chiswell_length(reduce(invert(gs[i])));
    if (li != len[i])
      push({"l(g)=l(g^-1)", gs[i], Word{}, Word{}, 2L * (li - len[i])});
  }

  // c2[i][j] = 2*c(g_i, g_j) = l(g_i) + l(g_j) - l(g_i^-1 g_j)
  std::vector<std::vector<long>> c2(nn, std::vector<long>(nn, 0));
  for (std::size_t i = 0; i < nn; ++i) {
    Word gi = invert(gs[i]);
    for (std::size_t j = 0; j < nn; ++j) {
      ++rep.pairs;
      long v = len[i] + len[j] - chiswell_length(multiply(gi, gs[j]));
      c2[i][j] = v;
      if (v < 0) push({"c(g,h)>=0", gs[i], gs[j], Word{}, v});
    }
  }

  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t k = 0; k < nn; ++k) {
        ++rep.triples;
        long lhs = c2[i][j], rhs = std::min(c2[i][k], c2[k][j]);
        if (lhs < rhs)
          push({"c(g,h)>=min(c(g,k),c(k,h))", gs[i], gs[j], gs[k], lhs - rhs});
      }
  return rep;
}

Word Universe::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<Elem> f;
  std::string tok;
  while (in >> tok) {
    auto x = p_.element(tok);
    if (!x) throw ParseError(0, "unknown element '" + tok + "' in word");
    f.push_back(*x);
  }
  if (f.empty()) throw ParseError(0, "empty word");
  return Word(std::move(f));
}

std::string Universe::print_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.f.size(); ++i) {
    if (i) out += ' ';
    out += p_.label(w.f[i]);
  }
  return out;
}

}  // namespace pg
