#pragma once

#include "pg/ball.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pg {

/// 2(x·y)_v = d(x,v) + d(y,v) - d(x,y).  Throws ExactnessError unless all
/// three pairwise distances are exact.
int gromov_x2(const Ball& b, int x, int y, int v);

/// Least delta satisfying (x·y)_v >= min{(x·z)_v, (z·y)_v} - 2*delta over
/// every quadruple whose six pairwise distances are exact.  The value is
/// quarter-granular, hence stored as 4*delta.
struct Delta4 {
  int delta_x4 = 0;
  std::array<int, 4> witness{-1, -1, -1, -1};  // x, y, z, v (ball ids)
  std::uint64_t quadruples = 0;                // exact quadruples scanned
};
Delta4 delta_4pt(const Ball& b, int threads = 1);

struct ThinBudget {
  std::size_t max_triangles = 2'000'000;  // exhaustive below, sampled above
  std::size_t geodesic_cap = 64;          // per-side geodesic enumeration cap
  std::uint64_t seed = 0;                 // for sampling only
};

/// Max over triangles with pairwise-exact vertices and over all geodesic
/// choices of the side-vs-other-two thinness.
struct DeltaThin {
  int delta = 0;
  std::array<int, 3> witness{-1, -1, -1};
  std::uint64_t triangles = 0;
  bool exhaustive = true;          // false when triangle sampling kicked in
  bool geodesics_complete = true;  // false when a side hit geodesic_cap
};
DeltaThin delta_thin(const Ball& b, const ThinBudget& budget = {}, int threads = 1);

/// Thinness of the specific triangle (a, v, w) over all geodesic choices:
/// max over a side's points of the min distance to the union of the other
/// two sides, maximized over the choices of all three geodesics.  Sets
/// *complete = false when geodesic enumeration was capped.
int triangle_thinness(const Ball& b, int a, int v, int w,
                      const ThinBudget& budget = {}, bool* complete = nullptr);

/// A product path: anchors joined by chosen geodesic segments.
struct PathInBall {
  std::vector<int> anchors;
  std::vector<std::vector<int>> segs;  // segs[i] joins anchors[i] to anchors[i+1]
  std::vector<int> points() const;     // all vertices in path order
};

/// Path traced from `base` by the prefixes of a reduced product, with the
/// first geodesic (in DAG order) chosen for every segment.  Throws
/// ExactnessError when an anchor leaves the ball or a segment is not exact.
PathInBall path_of_product(const Ball& b, int base, const Word& u);

/// Every geodesic-choice variant of the same path, capped.
std::vector<PathInBall> paths_of_product(const Ball& b, int base, const Word& u,
                                         std::size_t cap);

/// Symmetrized vertex-set Hausdorff distance.  Requires every cross pair
/// exact (ExactnessError otherwise).
int hausdorff(const Ball& b, const PathInBall& a, const PathInBall& c);

/// Max pairwise distance over the path's points; all pairs must be exact.
int diameter(const Ball& b, const PathInBall& a);

struct ConstEntry {
  int value = 0;
  bool exact = true;  // false when contributions fell outside the ball
  std::string witness;
  std::string note;
};

/// Measured constants: C0 = max |b| over b in B_P; C1 = max thinness of
/// triangles {1, p, pq} over all p, q in P; C2 (doubled) = max 2(p^-1·q)_1
/// over undefined pairs; C3 = max over p in P, vertices x on in-ball
/// geodesics 1 -> p, of the least |p2| with x = p1 p2 a reduced product
/// (p2 = 1 allowed).  Estimates at radius R; lower bounds for the ambient
/// constants.
struct HConstants {
  int radius = 0;
  std::string gens;
  ConstEntry c0, c1, c2, c3;  // c2.value is doubled (half-integers)
};
HConstants estimate_h_constants(const Ball& b, const ThinBudget& budget = {});

}  // namespace pg
