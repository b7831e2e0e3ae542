#include "pg/ball.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace pg {

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

GenSet GenSet::standard(const Universe& u) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < u.pregroup().size(); ++x)
    if (x != u.pregroup().identity()) elems.push_back(x);
  return of_elements(u, elems);
}

GenSet GenSet::of_elements(const Universe& u, const std::vector<Elem>& elems) {
  GenSet s;
  for (Elem x : elems) {
    if (x == u.pregroup().identity())
      throw std::invalid_argument("generator '" + u.pregroup().label(x) +
                                  "' is the identity");
    s.gens.push_back({u.pregroup().label(x), word_of({x})});
  }
  return s;
}

GenSet GenSet::parse(const Universe& u, std::string_view text) {
  GenSet s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    if (toks[0] != "gen" || toks.size() < 4 || toks[2] != "=")
      throw ParseError(lineno, "expected 'gen <name> = <word>'");
    const std::string& name = toks[1];
    for (const auto& g : s.gens)
      if (g.name == name) throw ParseError(lineno, "duplicate generator '" + name + "'");
    std::vector<Elem> f;
    for (std::size_t i = 3; i < toks.size(); ++i) {
      auto x = u.pregroup().element(toks[i]);
      if (!x) throw ParseError(lineno, "unknown element '" + toks[i] + "'");
      f.push_back(*x);
    }
    Word w = u.reduce(Word(std::move(f)));
    if (w.size() == 1 && w.f[0] == u.pregroup().identity())
      throw ParseError(lineno, "generator '" + name + "' reduces to the identity");
    s.gens.push_back({name, std::move(w)});
  }
  return s;
}

std::string GenSet::label() const {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].name;
  }
  return out;
}

Ball Ball::build(const Universe& u, GenSet s, int radius, std::size_t max_vertices) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  Ball b;
  b.u_ = &u;
  b.gens_ = std::move(s);
  b.radius_ = radius;

  std::vector<Word> inv_gen;
  inv_gen.reserve(b.gens_.size());
  for (const auto& g : b.gens_.gens) inv_gen.push_back(u.invert(g.word));

  Word one = u.canonical(word_of({u.pregroup().identity()}));
  b.words_.push_back(one);
  b.index_[one] = 0;
  b.dist0_.push_back(0);
  b.adj_.emplace_back();
  b.id1_ = 0;

  std::vector<int> frontier{0};
  for (int layer = 0; layer < radius && !frontier.empty(); ++layer) {
    // word of a next-layer vertex -> (from, gen, dir) discoveries
    std::map<Word, std::vector<std::array<int, 3>>> pending;
    for (int v : frontier) {
      for (std::size_t gi = 0; gi < b.gens_.size(); ++gi) {
        for (int dir : {+1, -1}) {
          const Word& gw = dir > 0 ? b.gens_.gens[gi].word : inv_gen[gi];
          Word target = u.canonical(u.multiply(b.word(v), gw));
          auto it = b.index_.find(target);
          if (it != b.index_.end()) {
            if (it->second == v) continue;
            b.adj_[static_cast<std::size_t>(v)].push_back(
                {it->second, static_cast<int>(gi), dir});
            b.adj_[static_cast<std::size_t>(it->second)].push_back(
                {v, static_cast<int>(gi), -dir});
          } else {
            pending[target].push_back({v, static_cast<int>(gi), dir});
          }
        }
      }
    }
    if (b.words_.size() + pending.size() > max_vertices)
      throw std::runtime_error("ball vertex cap exceeded (cap = " +
                               std::to_string(max_vertices) +
                               "); partial result refused");
    frontier.clear();
    for (auto& [w, froms] : pending) {
      int id = static_cast<int>(b.words_.size());
      b.words_.push_back(w);
      b.index_[w] = id;
      b.dist0_.push_back(layer + 1);
      b.adj_.emplace_back();
      for (const auto& [from, gi, dir] : froms) {
        b.adj_[static_cast<std::size_t>(from)].push_back({id, gi, dir});
        b.adj_[static_cast<std::size_t>(id)].push_back({from, gi, -dir});
      }
      frontier.push_back(id);
    }
  }
  for (auto& edges : b.adj_) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  b.fill_distances();
  return b;
}

void Ball::fill_distances() {
  const std::size_t n = words_.size();
  dist_.assign(n * n, -1);
  std::deque<int> queue;
  for (std::size_t a = 0; a < n; ++a) {
    int* row = dist_.data() + a * n;
    row[a] = 0;
    queue.clear();
    queue.push_back(static_cast<int>(a));
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Edge& e : adj_[static_cast<std::size_t>(v)]) {
        if (row[e.to] < 0) {
          row[e.to] = row[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    for (std::size_t c = 0; c < n; ++c)
      if (row[c] < 0)
        throw std::runtime_error("ball adjacency is disconnected");
  }
}

std::optional<int> Ball::find(const Word& w) const {
  Word c = u_->canonical(u_->reduce(w));
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Ball::find_element(Elem x) const {
  return find(word_of({x}));
}

std::string Ball::serialize() const {
  std::string out = "ball " + u_->pregroup().name() +
                    " R=" + std::to_string(radius_) + " gens=" + gens_.label() +
                    "\n";
  for (int id = 0; id < size(); ++id)
    out += "v " + std::to_string(id) + " " + u_->print_word(word(id)) + " " +
           std::to_string(dist0(id)) + "\n";
  for (int id = 0; id < size(); ++id)
    for (const Edge& e : neighbors(id))
      if (e.dir > 0)
        out += "e " + std::to_string(id) + " " + std::to_string(e.to) + " " +
               gens_.gens[static_cast<std::size_t>(e.gen)].name + "\n";
  return out;
}

Ball Ball::load(const Universe& u, std::string_view text,
                const GenSet* expected_gens) {
  Ball b;
  b.u_ = &u;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  std::vector<std::string> gen_names;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0] != "ball" || toks.size() != 4)
        throw ParseError(lineno, "expected 'ball <name> R=<r> gens=<names>'");
      if (toks[1] != u.pregroup().name())
        throw ParseError(lineno, "ball cache is for pregroup '" + toks[1] +
                                     "', not '" + u.pregroup().name() + "'");
      if (toks[2].rfind("R=", 0) != 0 || toks[3].rfind("gens=", 0) != 0)
        throw ParseError(lineno, "malformed ball header");
      try {
        b.radius_ = std::stoi(toks[2].substr(2));
      } catch (...) {
        throw ParseError(lineno, "bad radius '" + toks[2] + "'");
      }
      std::string csv = toks[3].substr(5);
      std::string cur;
      for (char c : csv + ",") {
        if (c == ',') {
          if (!cur.empty()) gen_names.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      if (expected_gens) {
        if (expected_gens->size() != gen_names.size())
          throw ParseError(lineno, "generator list does not match the cache header");
        for (std::size_t i = 0; i < gen_names.size(); ++i)
          if (expected_gens->gens[i].name != gen_names[i])
            throw ParseError(lineno, "generator list does not match the cache header");
        b.gens_ = *expected_gens;
      } else {
        for (const std::string& name : gen_names) {
          auto x = u.pregroup().element(name);
          if (!x)
            throw ParseError(lineno, "generator '" + name +
                                         "' is not an element label; supply the generator file");
          b.gens_.gens.push_back({name, word_of({*x})});
        }
      }
      header = true;
      continue;
    }
    if (toks[0] == "v") {
      if (toks.size() < 4) throw ParseError(lineno, "malformed vertex line");
      int id = -1, d0 = -1;
      try {
        id = std::stoi(toks[1]);
        d0 = std::stoi(toks.back());
      } catch (...) {
        throw ParseError(lineno, "malformed vertex line");
      }
      if (id != static_cast<int>(b.words_.size()))
        throw ParseError(lineno, "vertex ids must be consecutive from 0");
      std::vector<Elem> f;
      for (std::size_t i = 2; i + 1 < toks.size(); ++i) {
        auto x = u.pregroup().element(toks[i]);
        if (!x) throw ParseError(lineno, "unknown element '" + toks[i] + "'");
        f.push_back(*x);
      }
      if (f.empty()) throw ParseError(lineno, "malformed vertex line");
      Word w{std::move(f)};
      if (!(u.canonical(u.reduce(w)) == w))
        throw ParseError(lineno, "vertex word is not in canonical form");
      if (b.index_.count(w)) throw ParseError(lineno, "duplicate vertex word");
      b.words_.push_back(w);
      b.index_[w] = id;
      b.dist0_.push_back(d0);
      b.adj_.emplace_back();
      continue;
    }
    if (toks[0] == "e") {
      if (toks.size() != 4) throw ParseError(lineno, "malformed edge line");
      int a = -1, c = -1;
      try {
        a = std::stoi(toks[1]);
        c = std::stoi(toks[2]);
      } catch (...) {
        throw ParseError(lineno, "malformed edge line");
      }
      if (a < 0 || c < 0 || a >= static_cast<int>(b.words_.size()) ||
          c >= static_cast<int>(b.words_.size()))
        throw ParseError(lineno, "edge endpoint out of range");
      int gi = -1;
      for (std::size_t i = 0; i < b.gens_.size(); ++i)
        if (b.gens_.gens[i].name == toks[3]) gi = static_cast<int>(i);
      if (gi < 0) throw ParseError(lineno, "unknown generator '" + toks[3] + "'");
      b.adj_[static_cast<std::size_t>(a)].push_back({c, gi, +1});
      b.adj_[static_cast<std::size_t>(c)].push_back({a, gi, -1});
      continue;
    }
    throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
  }
  if (!header) throw ParseError(0, "missing ball header");
  if (b.words_.empty()) throw ParseError(0, "ball cache has no vertices");
  auto it = b.index_.find(u.canonical(word_of({u.pregroup().identity()})));
  if (it == b.index_.end()) throw ParseError(0, "ball cache lacks the identity vertex");
  b.id1_ = it->second;
  for (auto& edges : b.adj_) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  b.fill_distances();
  for (int v = 0; v < b.size(); ++v)
    if (b.dball(b.id1_, v) != b.dist0(v))
      throw ParseError(0, "ball cache corrupt: stored dist0 of vertex " +
                              std::to_string(v) + " disagrees with its edges");
  return b;
}

GeodesicDag geodesics(const Ball& b, int u, int v) {
  if (!b.exact(u, v))
    throw ExactnessError(
        "geodesics: distance between '" + b.universe().print_word(b.word(u)) +
        "' and '" + b.universe().print_word(b.word(v)) +
        "' is not certified exact at radius " + std::to_string(b.radius()));
  GeodesicDag g;
  g.src = u;
  g.dst = v;
  g.length = b.dball(u, v);
  const int L = g.length;
  std::vector<std::pair<int, int>> order;  // (layer, vertex)
  for (int w = 0; w < b.size(); ++w)
    if (b.dball(u, w) + b.dball(w, v) == L) order.push_back({b.dball(u, w), w});
  std::sort(order.begin(), order.end());
  std::vector<int> pos(static_cast<std::size_t>(b.size()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.verts.push_back(order[i].second);
    pos[static_cast<std::size_t>(order[i].second)] = static_cast<int>(i);
  }
  g.next.assign(g.verts.size(), {});
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    int w = g.verts[i];
    int layer = b.dball(u, w);
    std::vector<int> succ;
    for (const Ball::Edge& e : b.neighbors(w)) {
      int p = pos[static_cast<std::size_t>(e.to)];
      if (p >= 0 && b.dball(u, e.to) == layer + 1) succ.push_back(p);
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    g.next[i] = std::move(succ);
  }
  // path counts from dst backwards, saturating
  std::vector<std::uint64_t> cnt(g.verts.size(), 0);
  int dst_pos = pos[static_cast<std::size_t>(v)];
  cnt[static_cast<std::size_t>(dst_pos)] = 1;
  for (std::size_t i = g.verts.size(); i-- > 0;) {
    if (static_cast<int>(i) == dst_pos) continue;
    std::uint64_t total = 0;
    for (int s : g.next[i]) {
      total += cnt[static_cast<std::size_t>(s)];
      if (total >= GeodesicDag::kCountCap) {
        total = GeodesicDag::kCountCap;
        break;
      }
    }
    cnt[i] = total;
  }
  g.path_count = cnt[0];  // verts[0] is src (layer 0, unique)
  return g;
}

std::vector<std::vector<int>> GeodesicDag::paths(std::size_t cap) const {
  std::vector<std::vector<int>> out;
  if (verts.empty() || cap == 0) return out;
  std::vector<int> cur;
  std::function<void(int)> walk = [&](int i) {
    if (out.size() >= cap) return;
    cur.push_back(verts[static_cast<std::size_t>(i)]);
    if (verts[static_cast<std::size_t>(i)] == dst) {
      out.push_back(cur);
    } else {
      for (int s : next[static_cast<std::size_t>(i)]) {
        if (out.size() >= cap) break;
        walk(s);
      }
    }
    cur.pop_back();
  };
  walk(0);
  return out;
}

}  // namespace pg
