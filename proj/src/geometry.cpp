#include "pg/geometry.hpp"

#include "pg/parallel.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>

namespace pg {

namespace {

void require_exact(const Ball& b, int x, int y, const char* op) {
  if (!b.exact(x, y))
    throw ExactnessError(std::string(op) + ": distance between '" +
                         b.universe().print_word(b.word(x)) + "' and '" +
                         b.universe().print_word(b.word(y)) +
                         "' is not certified exact at radius " +
                         std::to_string(b.radius()));
}

struct PairGeo {
  std::vector<int> verts;
  std::vector<std::vector<int>> paths;
  bool complete = true;
};

PairGeo make_pair_geo(const Ball& b, int u, int v, std::size_t cap) {
  GeodesicDag dag = geodesics(b, u, v);
  PairGeo g;
  g.verts = dag.verts;
  g.paths = dag.paths(cap);
  g.complete = dag.path_count <= g.paths.size();
  return g;
}

// Worst geodesic choice: max over the pair's geodesics of the min distance
// from t to that geodesic.
int far_side(const Ball& b, int t, const PairGeo& g) {
  int worst = 0;
  const int* row = b.dist_row(t);
  for (const auto& path : g.paths) {
    int close = INT_MAX;
    for (int s : path) close = std::min(close, row[s]);
    worst = std::max(worst, close);
  }
  return worst;
}

// One side against the union of the other two, over all geodesic choices.
int side_vs_rest(const Ball& b, const PairGeo& side, const PairGeo& o1,
                 const PairGeo& o2) {
  int val = 0;
  for (int t : side.verts)
    val = std::max(val, std::min(far_side(b, t, o1), far_side(b, t, o2)));
  return val;
}

int thinness_from_pairs(const Ball& b, const PairGeo& ab, const PairGeo& ac,
                        const PairGeo& cb) {
  int v = side_vs_rest(b, ab, ac, cb);
  v = std::max(v, side_vs_rest(b, ac, ab, cb));
  v = std::max(v, side_vs_rest(b, cb, ab, ac));
  return v;
}

// Cache of PairGeo keyed by unordered vertex pair.
struct PairCache {
  const Ball& b;
  std::size_t cap;
  std::map<std::pair<int, int>, PairGeo> store;
  const PairGeo& get(int u, int v) {
    auto key = std::minmax(u, v);
    auto it = store.find(key);
    if (it == store.end())
      it = store.emplace(key, make_pair_geo(b, key.first, key.second, cap)).first;
    return it->second;
  }
};

}  // namespace

int gromov_x2(const Ball& b, int x, int y, int v) {
  require_exact(b, x, v, "gromov product");
  require_exact(b, y, v, "gromov product");
  require_exact(b, x, y, "gromov product");
  return b.dball(x, v) + b.dball(y, v) - b.dball(x, y);
}

Delta4 delta_4pt(const Ball& b, int threads) {
  const int n = b.size();
  const int r2 = 2 * b.radius();
  struct Part {
    int best = INT_MIN;
    std::array<int, 4> w{-1, -1, -1, -1};
    std::uint64_t quads = 0;
  };
  auto chunk = [&](std::size_t begin, std::size_t end) {
    Part part;
    std::vector<int> lv;
    for (std::size_t vi = begin; vi < end; ++vi) {
      const int v = static_cast<int>(vi);
      const int* rowv = b.dist_row(v);
      const int d0v = b.dist0(v);
      lv.clear();
      for (int x = 0; x < n; ++x)
        if (d0v + b.dist0(x) + rowv[x] <= r2) lv.push_back(x);
      for (std::size_t i = 0; i < lv.size(); ++i) {
        const int x = lv[i];
        const int* rowx = b.dist_row(x);
        const int d0x = b.dist0(x);
        const int dxv = rowv[x];
        for (std::size_t j = i; j < lv.size(); ++j) {
          const int y = lv[j];
          if (d0x + b.dist0(y) + rowx[y] > r2) continue;
          const int* rowy = b.dist_row(y);
          const int d0y = b.dist0(y);
          const int gxy = dxv + rowv[y] - rowx[y];
          for (const int z : lv) {
            if (d0x + b.dist0(z) + rowx[z] > r2) continue;
            if (d0y + b.dist0(z) + rowy[z] > r2) continue;
            ++part.quads;
            const int gxz = dxv + rowv[z] - rowx[z];
            const int gzy = rowv[z] + rowv[y] - rowy[z];
            const int deficiency = std::min(gxz, gzy) - gxy;
            if (deficiency > part.best) {
              part.best = deficiency;
              part.w = {x, y, z, v};
            }
          }
        }
      }
    }
    return part;
  };
  Part total = parallel_reduce<Part>(
      static_cast<std::size_t>(n), threads, Part{}, chunk,
      [](Part& acc, const Part& p) {
        if (p.best > acc.best) {
          acc.best = p.best;
          acc.w = p.w;
        }
        acc.quads += p.quads;
      });
  Delta4 d;
  d.quadruples = total.quads;
  if (total.best > INT_MIN) d.witness = total.w;
  d.delta_x4 = std::max(0, total.best == INT_MIN ? 0 : total.best);
  return d;
}

int triangle_thinness(const Ball& b, int a, int v, int w,
                      const ThinBudget& budget, bool* complete) {
  PairGeo av = make_pair_geo(b, a, v, budget.geodesic_cap);
  PairGeo aw = make_pair_geo(b, a, w, budget.geodesic_cap);
  PairGeo vw = make_pair_geo(b, v, w, budget.geodesic_cap);
  if (complete) *complete = av.complete && aw.complete && vw.complete;
  return thinness_from_pairs(b, av, aw, vw);
}

DeltaThin delta_thin(const Ball& b, const ThinBudget& budget, int threads) {
  const int n = b.size();
  DeltaThin out;
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const std::uint64_t total_triples = nn * (nn - 1) * (nn - 2) / 6;
  struct Part {
    int best = -1;
    std::array<int, 3> w{-1, -1, -1};
    std::uint64_t count = 0;
    bool complete = true;
  };
  auto eval = [&](PairCache& cache, int a, int v, int w, Part& part) {
    if (!b.exact(a, v) || !b.exact(a, w) || !b.exact(v, w)) return;
    const PairGeo& av = cache.get(a, v);
    const PairGeo& aw = cache.get(a, w);
    const PairGeo& vw = cache.get(v, w);
    part.complete = part.complete && av.complete && aw.complete && vw.complete;
    ++part.count;
    int t = thinness_from_pairs(b, av, aw, vw);
    if (t > part.best) {
      part.best = t;
      part.w = {a, v, w};
    }
  };
  if (total_triples <= budget.max_triangles) {
    auto chunk = [&](std::size_t begin, std::size_t end) {
      Part part;
      PairCache cache{b, budget.geodesic_cap, {}};
      for (std::size_t ai = begin; ai < end; ++ai)
        for (int v = static_cast<int>(ai) + 1; v < n; ++v)
          for (int w = v + 1; w < n; ++w)
            eval(cache, static_cast<int>(ai), v, w, part);
      return part;
    };
    Part total = parallel_reduce<Part>(
        static_cast<std::size_t>(n), threads, Part{}, chunk,
        [](Part& acc, const Part& p) {
          if (p.best > acc.best) {
            acc.best = p.best;
            acc.w = p.w;
          }
          acc.count += p.count;
          acc.complete = acc.complete && p.complete;
        });
    out.delta = std::max(0, total.best);
    out.witness = total.w;
    out.triangles = total.count;
    out.exhaustive = true;
    out.geodesics_complete = total.complete;
  } else {
    Part part;
    PairCache cache{b, budget.geodesic_cap, {}};
    std::mt19937_64 rng(budget.seed * 0x9e3779b97f4a7c15ull + 1);
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = budget.max_triangles * 20ull;
    while (part.count < budget.max_triangles && attempts < max_attempts) {
      ++attempts;
      int a = static_cast<int>(rng() % nn);
      int v = static_cast<int>(rng() % nn);
      int w = static_cast<int>(rng() % nn);
      if (a == v || a == w || v == w) continue;
      int lo = std::min({a, v, w}), hi = std::max({a, v, w});
      int mid = a + v + w - lo - hi;
      eval(cache, lo, mid, hi, part);
    }
    out.delta = std::max(0, part.best);
    out.witness = part.w;
    out.triangles = part.count;
    out.exhaustive = false;
    out.geodesics_complete = part.complete;
  }
  return out;
}

std::vector<int> PathInBall::points() const {
  std::vector<int> out;
  if (segs.empty()) return anchors;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t k = (i == 0 ? 0 : 1); k < segs[i].size(); ++k)
      out.push_back(segs[i][k]);
  return out;
}

std::vector<PathInBall> paths_of_product(const Ball& b, int base, const Word& u,
                                         std::size_t cap) {
  const Universe& uni = b.universe();
  Word r = uni.reduce(u);
  std::vector<int> anchors{base};
  Word cur = b.word(base);
  for (Elem f : r.f) {
    cur = uni.multiply(cur, word_of({f}));
    auto id = b.find(cur);
    if (!id)
      throw ExactnessError("path anchor '" + uni.print_word(cur) +
                           "' escapes the ball");
    if (*id != anchors.back()) anchors.push_back(*id);
  }
  std::vector<std::vector<std::vector<int>>> seglists;
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    GeodesicDag dag = geodesics(b, anchors[i], anchors[i + 1]);
    seglists.push_back(dag.paths(cap));
  }
  std::vector<PathInBall> out;
  std::vector<std::size_t> idx(seglists.size(), 0);
  while (out.size() < cap) {
    PathInBall p;
    p.anchors = anchors;
    for (std::size_t i = 0; i < seglists.size(); ++i)
      p.segs.push_back(seglists[i][idx[i]]);
    out.push_back(std::move(p));
    bool bumped = false;
    for (std::size_t i = seglists.size(); i-- > 0;) {
      if (++idx[i] < seglists[i].size()) {
        bumped = true;
        break;
      }
      idx[i] = 0;
    }
    if (!bumped) break;
  }
  return out;
}

PathInBall path_of_product(const Ball& b, int base, const Word& u) {
  return paths_of_product(b, base, u, 1).front();
}

int hausdorff(const Ball& b, const PathInBall& a, const PathInBall& c) {
  auto pa = a.points(), pc = c.points();
  auto one_way = [&](const std::vector<int>& from, const std::vector<int>& to) {
    int worst = 0;
    for (int t : from) {
      int close = INT_MAX;
      for (int s : to) {
        require_exact(b, t, s, "hausdorff");
        close = std::min(close, b.dball(t, s));
      }
      worst = std::max(worst, close);
    }
    return worst;
  };
  return std::max(one_way(pa, pc), one_way(pc, pa));
}

int diameter(const Ball& b, const PathInBall& a) {
  auto pts = a.points();
  int worst = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      require_exact(b, pts[i], pts[j], "diameter");
      worst = std::max(worst, b.dball(pts[i], pts[j]));
    }
  return worst;
}

HConstants estimate_h_constants(const Ball& b, const ThinBudget& budget) {
  const Universe& u = b.universe();
  const Pregroup& p = u.pregroup();
  HConstants h;
  h.radius = b.radius();
  h.gens = b.gens_label();
  const int v1 = b.identity_vertex();

  // C0: max |b| over B_P
  {
    std::string missing;
    for (Elem x : u.bp()) {
      auto id = b.find_element(x);
      if (!id) {
        missing += (missing.empty() ? "" : ", ") + p.label(x);
        continue;
      }
      const int d = b.dist0(*id);
      if (h.c0.witness.empty() || d > h.c0.value) {
        h.c0.value = d;
        h.c0.witness = p.label(x);
      }
    }
    if (!missing.empty()) {
      h.c0.exact = false;
      h.c0.note = "outside the ball: " + missing;
    }
  }

  // C1: triangles {1, p, pq} over all p, q in P
  {
    std::size_t skipped = 0;
    bool complete = true;
    for (Elem pe = 0; pe < p.size(); ++pe) {
      auto vp = b.find_element(pe);
      if (!vp) {
        ++skipped;
        continue;
      }
      for (Elem qe = 0; qe < p.size(); ++qe) {
        auto vpq = b.find(u.multiply(word_of({pe}), word_of({qe})));
        if (!vpq || !b.exact(*vp, *vpq)) {
          ++skipped;
          continue;
        }
        bool comp = true;
        int t = triangle_thinness(b, v1, *vp, *vpq, budget, &comp);
        complete = complete && comp;
        if (t > h.c1.value) {
          h.c1.value = t;
          h.c1.witness = "p=" + p.label(pe) + " q=" + p.label(qe);
        }
      }
    }
    if (skipped > 0) {
      h.c1.exact = false;
      h.c1.note = std::to_string(skipped) + " (p,q) pairs outside the exact region";
    }
    if (!complete)
      h.c1.note += (h.c1.note.empty() ? "" : "; ") + std::string("geodesic choices capped");
  }

  // C2: max 2(p^-1 · q)_1 over pairs with pq undefined
  {
    std::size_t skipped = 0;
    bool any = false;
    for (Elem pe = 0; pe < p.size(); ++pe)
      for (Elem qe = 0; qe < p.size(); ++qe) {
        if (p.defined(pe, qe)) continue;
        any = true;
        auto vpi = b.find_element(p.inverse(pe));
        auto vq = b.find_element(qe);
        if (!vpi || !vq || !b.exact(*vpi, *vq)) {
          ++skipped;
          continue;
        }
        int g = gromov_x2(b, *vpi, *vq, v1);
        if (g > h.c2.value) {
          h.c2.value = g;
          h.c2.witness = "p=" + p.label(pe) + " q=" + p.label(qe);
        }
      }
    if (!any) h.c2.note = "no undefined pairs (total table)";
    if (skipped > 0) {
      h.c2.exact = false;
      h.c2.note += (h.c2.note.empty() ? "" : "; ") +
                   (std::to_string(skipped) + " pairs outside the exact region");
    }
  }

  // C3: geodesic vertices 1 -> p admit reduced factorizations x = p1 p2
  {
    std::map<Word, std::pair<int, Elem>> tail;  // canonical form -> (|p2|, p2)
    bool tails_in_ball = true;
    for (Elem x = 0; x < p.size(); ++x)
      tail[u.canonical(word_of({x}))] = {0, p.identity()};
    for (Elem p1 = 0; p1 < p.size(); ++p1)
      for (Elem p2 = 0; p2 < p.size(); ++p2) {
        if (p.defined(p1, p2)) continue;
        auto vtail = b.find_element(p2);
        if (!vtail) {
          tails_in_ball = false;
          continue;
        }
        Word w = u.canonical(word_of({p1, p2}));
        int len = b.dist0(*vtail);
        auto it = tail.find(w);
        if (it == tail.end() || len < it->second.first) tail[w] = {len, p2};
      }
    std::string unrep;
    std::size_t skipped = 0;
    for (Elem pe = 0; pe < p.size(); ++pe) {
      auto vp = b.find_element(pe);
      if (!vp) {
        ++skipped;
        continue;
      }
      GeodesicDag dag = geodesics(b, v1, *vp);
      for (int x : dag.verts) {
        auto it = tail.find(b.word(x));
        if (it == tail.end()) {
          if (unrep.empty())
            unrep = "no reduced p1·p2 factorization for '" +
                    u.print_word(b.word(x)) + "' on a geodesic 1->" + p.label(pe);
          continue;
        }
        if (it->second.first > h.c3.value) {
          h.c3.value = it->second.first;
          h.c3.witness = "p=" + p.label(pe) + " x=" + u.print_word(b.word(x)) +
                         " tail=" + p.label(it->second.second);
        }
      }
    }
    if (skipped > 0 || !tails_in_ball) {
      h.c3.exact = false;
      h.c3.note = "some carrier elements outside the ball";
    }
    if (!unrep.empty()) {
      h.c3.exact = false;
      h.c3.note += (h.c3.note.empty() ? "" : "; ") + unrep;
    }
  }
  return h;
}

}  // namespace pg
