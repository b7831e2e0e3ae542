#pragma once

#include "pg/words.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pg {

/// Raised when a metric quantity would depend on vertices or distances the
/// ball cannot certify (the exactness predicate fails).  Results are refused
/// rather than approximated.
struct ExactnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite generating set: named non-identity group elements given as
/// reduced products.  The metric treats S as closed under formal inversion;
/// inverses are traversed implicitly and never listed.
struct GenSet {
  struct Gen {
    std::string name;
    Word word;  // reduced, not the identity
  };
  std::vector<Gen> gens;

  /// S = P minus the identity, named by element labels.
  static GenSet standard(const Universe& u);

  /// Selected carrier elements, named by their labels.
  static GenSet of_elements(const Universe& u, const std::vector<Elem>& elems);

  /// `gen <name> = <word over P>` lines ('#' comments allowed).
  static GenSet parse(const Universe& u, std::string_view text);

  std::size_t size() const { return gens.size(); }
  /// Comma-joined generator names, e.g. "a,b".
  std::string label() const;
};

/// Radius-R ball of the Cayley graph of U(P) with respect to a GenSet.
/// Vertices are group elements keyed by canonical reduced product; ids are
/// assigned in canonical word order within each BFS layer, so numbering is
/// reproducible.  All pairwise in-ball distances are precomputed.
///
/// A distance is "exact" (equal to the ambient Cayley-graph distance) when
/// dist0(u) + dist0(v) + d_ball(u,v) <= 2R: every ambient geodesic between
/// u and v then lies inside the ball, because any point w on one satisfies
/// 2|w| <= |u| + |v| + d(u,v).
class Ball {
 public:
  struct Edge {
    int to;
    int gen;   // index into gens().gens
    int dir;   // +1: to = from·g, -1: to = from·g^{-1}
    bool operator<(const Edge& o) const {
      return std::tie(to, gen, dir) < std::tie(o.to, o.gen, o.dir);
    }
    bool operator==(const Edge& o) const {
      return to == o.to && gen == o.gen && dir == o.dir;
    }
  };

  struct Dist {
    int d;
    bool exact;
  };

  /// BFS closure from 1 under right multiplication by S and S^{-1}.
  /// Throws std::runtime_error when the vertex cap would be exceeded —
  /// a partial ball is never returned.
  static Ball build(const Universe& u, GenSet s, int radius,
                    std::size_t max_vertices = 2'000'000);

  int radius() const { return radius_; }
  int size() const { return static_cast<int>(words_.size()); }
  const Universe& universe() const { return *u_; }
  const GenSet& gens() const { return gens_; }
  std::string gens_label() const { return gens_.label(); }

  int identity_vertex() const { return id1_; }
  const Word& word(int id) const { return words_[static_cast<std::size_t>(id)]; }
  int dist0(int id) const { return dist0_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& neighbors(int id) const {
    return adj_[static_cast<std::size_t>(id)];
  }

  /// Vertex of a product (reduced or not), or nullopt when the element is
  /// outside the ball.
  std::optional<int> find(const Word& w) const;
  std::optional<int> find_element(Elem x) const;

  int dball(int a, int b) const {
    return dist_[static_cast<std::size_t>(a) * words_.size() +
                 static_cast<std::size_t>(b)];
  }
  /// Row pointer for tight scans (dist_row(a)[b] == dball(a, b)).
  const int* dist_row(int a) const {
    return dist_.data() + static_cast<std::size_t>(a) * words_.size();
  }
  bool exact(int a, int b) const {
    return dist0(a) + dist0(b) + dball(a, b) <= 2 * radius_;
  }
  Dist dist(int a, int b) const { return {dball(a, b), exact(a, b)}; }

  /// Text cache; load() re-derives the distance matrix from the edges and
  /// cross-checks the stored dist0 column, so a tampered cache is rejected.
  std::string serialize() const;
  static Ball load(const Universe& u, std::string_view text,
                   const GenSet* expected_gens = nullptr);

 private:
  Ball() = default;
  void fill_distances();

  const Universe* u_ = nullptr;
  GenSet gens_;
  int radius_ = 0;
  int id1_ = 0;
  std::vector<Word> words_;
  std::map<Word, int> index_;
  std::vector<int> dist0_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<int> dist_;  // dense size() x size()
};

/// All in-ball geodesics between two vertices, as a DAG of forward edges.
/// Construction refuses non-exact endpoint pairs, so the DAG is guaranteed
/// complete (it enumerates exactly the ambient geodesics).
struct GeodesicDag {
  int src = -1, dst = -1;
  int length = 0;
  std::vector<int> verts;  // ball ids, sorted by (distance from src, id)
  std::vector<std::vector<int>> next;  // per verts index: successor indices
  std::uint64_t path_count = 0;        // saturates at the cap below
  static constexpr std::uint64_t kCountCap = 1'000'000'000ull;

  /// Geodesics as ball-vertex sequences src..dst, in lexicographic DAG
  /// order, at most `cap` of them.
  std::vector<std::vector<int>> paths(std::size_t cap) const;
};

GeodesicDag geodesics(const Ball& b, int u, int v);

}  // namespace pg
