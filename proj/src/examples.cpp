#include "pg/examples.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pg {

namespace {

// mt19937_64 raw draws are portable; distributions are not, so sample by hand.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

void check_group(const GroupData& g) {
  int n = g.size();
  if (n == 0 || g.table.size() != static_cast<std::size_t>(n) * n)
    throw ParseError(0, "not a group table: bad size");
  for (int x : g.table)
    if (x < 0 || x >= n) throw ParseError(0, "not a group table: value out of range");
  for (int x = 0; x < n; ++x)
    if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x)
      throw ParseError(0, "not a group table: identity fails");
  for (int x = 0; x < n; ++x) {
    bool has_inv = false;
    for (int y = 0; y < n && !has_inv; ++y)
      has_inv = g.mul(x, y) == g.identity && g.mul(y, x) == g.identity;
    if (!has_inv) throw ParseError(0, "not a group table: missing inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw ParseError(0, "not a group table: not associative");
}

int group_inverse(const GroupData& g, int x) {
  for (int y = 0; y < g.size(); ++y)
    if (g.mul(x, y) == g.identity) return y;
  return -1;
}

}  // namespace

GroupData group_cyclic(int n, char letter) {
  if (n < 1) throw ParseError(0, "cyclic group order must be positive");
  GroupData g;
  g.labels.push_back("1");
  for (int i = 1; i < n; ++i) {
    std::string l(1, letter);
    if (i > 1) l += std::to_string(i);
    g.labels.push_back(l);
  }
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.table[x * n + y] = (x + y) % n;
  return g;
}

GroupData group_klein4() {
  GroupData g;
  g.labels = {"1", "p", "q", "pq"};
  // indices as bitmasks {0,1,2,3} with xor product
  g.table.resize(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) g.table[x * 4 + y] = x ^ y;
  return g;
}

GroupData group_s3() {
  // elements r^i s^j, i mod 3, j mod 2, with s r = r^2 s
  auto id = [](int i, int j) { return i + 3 * j; };
  GroupData g;
  g.labels = {"1", "r", "r2", "s", "rs", "r2s"};
  g.table.resize(36);
  for (int i1 = 0; i1 < 3; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
          int i = ((i1 + (j1 ? 3 - i2 : i2)) % 3 + 3) % 3;
          int j = (j1 + j2) % 2;
          g.table[id(i1, j1) * 6 + id(i2, j2)] = id(i, j);
        }
  return g;
}

Pregroup make_group(std::string name, const GroupData& g) {
  check_group(g);
  int n = g.size();
  std::vector<Elem> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = group_inverse(g, x);
  std::vector<Elem> table(g.table.begin(), g.table.end());
  return Pregroup::raw(std::move(name), g.labels, g.identity, std::move(inv),
                       std::move(table));
}

Pregroup make_free(int rank) {
  if (rank < 1) throw ParseError(0, "free rank must be positive");
  std::vector<std::string> labels{"1"};
  std::vector<Elem> inv{0};
  const char* low = "xyz";
  for (int i = 0; i < rank; ++i) {
    std::string g, gi;
    if (rank <= 3) {
      g = std::string(1, low[i]);
      gi = std::string(1, static_cast<char>(low[i] - 'a' + 'A'));
    } else {
      g = "x" + std::to_string(i + 1);
      gi = "X" + std::to_string(i + 1);
    }
    labels.push_back(g);
    labels.push_back(gi);
    inv.push_back(static_cast<Elem>(labels.size()) - 1);
    inv.push_back(static_cast<Elem>(labels.size()) - 2);
  }
  // only the forced identity and inverse rows are defined
  return Pregroup::make("free" + std::to_string(rank), std::move(labels), 0,
                        std::move(inv), {});
}

Pregroup make_amalgam(std::string name, const GroupData& g1, const GroupData& g2,
                      const std::vector<int>& sub1, const std::vector<int>& sub2) {
  check_group(g1);
  check_group(g2);
  auto fail = [](const std::string& why) {
    throw ParseError(0, "amalgam embedding mismatch: " + why);
  };
  if (sub1.size() != sub2.size()) fail("identified sets differ in size");
  int k = static_cast<int>(sub1.size());
  std::vector<int> pos1(g1.size(), -1), pos2(g2.size(), -1);
  for (int i = 0; i < k; ++i) {
    if (sub1[i] < 0 || sub1[i] >= g1.size() || sub2[i] < 0 || sub2[i] >= g2.size())
      fail("identified element out of range");
    if (pos1[sub1[i]] != -1 || pos2[sub2[i]] != -1) fail("repeated identified element");
    pos1[sub1[i]] = i;
    pos2[sub2[i]] = i;
  }
  if (k == 0 || pos1[g1.identity] == -1 || pos2[g2.identity] == -1 ||
      pos1[g1.identity] != pos2[g2.identity])
    fail("identities must be identified with each other");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p1 = g1.mul(sub1[i], sub1[j]);
      int p2 = g2.mul(sub2[i], sub2[j]);
      if (pos1[p1] == -1 || pos2[p2] == -1) fail("identified set is not a subgroup");
      if (pos1[p1] != pos2[p2]) fail("gluing map is not an isomorphism");
    }

  // carrier: all of G1, then G2 minus the glued copy, in declaration order
  int n1 = g1.size();
  std::vector<std::string> labels(g1.labels);
  std::vector<int> glob2(g2.size(), -1);  // G2 index -> carrier index
  for (int i = 0; i < k; ++i) glob2[sub2[i]] = sub1[i];
  for (int x = 0; x < g2.size(); ++x)
    if (glob2[x] == -1) {
      glob2[x] = static_cast<int>(labels.size());
      labels.push_back(g2.labels[x]);
    }
  int n = static_cast<int>(labels.size());
  std::vector<int> back2(n, -1);  // carrier index -> G2 index (or -1)
  for (int x = 0; x < g2.size(); ++x) back2[glob2[x]] = x;

  std::vector<Elem> inv(n), table(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n1; ++x) inv[x] = group_inverse(g1, x);
  for (int x = n1; x < n; ++x) inv[x] = glob2[group_inverse(g2, back2[x])];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x < n1 && y < n1) table[x * n + y] = g1.mul(x, y);
      else if (back2[x] != -1 && back2[y] != -1)
        table[x * n + y] = glob2[g2.mul(back2[x], back2[y])];
    }
  return Pregroup::raw(std::move(name), std::move(labels), g1.identity,
                       std::move(inv), std::move(table));
}

Pregroup make_amalgam_cyclic(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1 || m % k || n % k)
    throw ParseError(0, "amalgam embedding mismatch: shared order must divide both factors");
  GroupData g1 = group_cyclic(m, 'a'), g2 = group_cyclic(n, 'b');
  std::vector<int> sub1, sub2;
  for (int j = 0; j < k; ++j) {
    sub1.push_back(j * (m / k));
    sub2.push_back(j * (n / k));
  }
  return make_amalgam("amalgam_z" + std::to_string(m) + "_z" + std::to_string(n) +
                          "_z" + std::to_string(k),
                      g1, g2, sub1, sub2);
}

Pregroup make_hnn_slice(std::string name, const GroupData& h,
                        const std::vector<int>& a_elems,
                        const std::vector<int>& b_elems) {
  check_group(h);
  auto fail = [](const std::string& why) {
    throw ParseError(0, "associated subgroup mismatch: " + why);
  };
  if (a_elems.size() != b_elems.size()) fail("associated sets differ in size");
  int k = static_cast<int>(a_elems.size());
  int nh = h.size();
  std::vector<int> phi(nh, -1), in_a(nh, 0), in_b(nh, 0);
  for (int i = 0; i < k; ++i) {
    if (a_elems[i] < 0 || a_elems[i] >= nh || b_elems[i] < 0 || b_elems[i] >= nh)
      fail("element out of range");
    phi[a_elems[i]] = b_elems[i];
    in_a[a_elems[i]] = 1;
    in_b[b_elems[i]] = 1;
  }
  if (k == 0 || !in_a[h.identity] || phi[h.identity] != h.identity)
    fail("identity must map to identity");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int pa = h.mul(a_elems[i], a_elems[j]);
      int pb = h.mul(b_elems[i], b_elems[j]);
      if (!in_a[pa] || !in_b[pb]) fail("associated sets are not subgroups");
      if (phi[pa] != pb) fail("association map is not an isomorphism");
    }
  std::vector<int> phi_inv(nh, -1);
  for (int i = 0; i < k; ++i) phi_inv[b_elems[i]] = a_elems[i];

  // carrier layout: H (0..nh-1), then h*t (nh..2nh-1), then t^-1*h (2nh..3nh-1)
  int n = 3 * nh;
  auto HT = [&](int x) { return nh + x; };
  auto TH = [&](int x) { return 2 * nh + x; };
  std::vector<std::string> labels(h.labels);
  for (int x = 0; x < nh; ++x)
    labels.push_back(x == h.identity ? "t" : h.labels[x] + "t");
  for (int x = 0; x < nh; ++x)
    labels.push_back(x == h.identity ? "T" : "T" + h.labels[x]);

  std::vector<Elem> inv(n);
  for (int x = 0; x < nh; ++x) {
    int xi = group_inverse(h, x);
    inv[x] = xi;
    inv[HT(x)] = TH(xi);   // (x t)^-1 = t^-1 x^-1
    inv[TH(x)] = HT(xi);
  }
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = h.mul(x, y);
      table[x * n + y] = xy;                    // H * H
      table[x * n + HT(y)] = HT(xy);            // x * (y t)
      table[TH(x) * n + y] = TH(xy);            // (t^-1 x) * y
      table[HT(x) * n + TH(y)] = xy;            // (x t)(t^-1 y)
      if (in_a[y])                              // (x t) * y = (x phi(y)) t
        table[HT(x) * n + y] = HT(h.mul(x, phi[y]));
      if (in_a[x])                              // x * (t^-1 y) = t^-1 (phi(x) y)
        table[x * n + TH(y)] = TH(h.mul(phi[x], y));
      if (in_b[xy])                             // (t^-1 x)(y t) = phi^-1(x y)
        table[TH(x) * n + HT(y)] = phi_inv[xy];
    }
  return Pregroup::raw(std::move(name), std::move(labels), h.identity,
                       std::move(inv), std::move(table));
}

Pregroup make_hnn_slice_klein() {
  // A = <p> = {1,p}, B = <q> = {1,q}, phi(p) = q
  return make_hnn_slice("hnn_slice_klein", group_klein4(), {0, 1}, {0, 2});
}

Pregroup make_random_valid(std::uint64_t seed, int size) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  if (size < 3) size = 3;
  int mode = static_cast<int>(next_below(rng, 3));
  Pregroup p = [&]() {
    switch (mode) {
      case 0: {
        // free-involution table: identity plus a random involution, only
        // forced rows defined (free product of copies of Z and Z2)
        int n = size;
        std::vector<std::string> labels{"1"};
        for (int i = 1; i < n; ++i) labels.push_back("e" + std::to_string(i));
        std::vector<Elem> inv(n);
        std::iota(inv.begin(), inv.end(), 0);
        std::vector<int> rest;
        for (int i = 1; i < n; ++i) rest.push_back(i);
        while (rest.size() >= 2) {
          if (next_below(rng, 2) == 0) {
            rest.erase(rest.begin());  // self-inverse
          } else {
            std::size_t j = 1 + next_below(rng, rest.size() - 1);
            inv[rest[0]] = rest[j];
            inv[rest[j]] = rest[0];
            rest.erase(rest.begin() + j);
            rest.erase(rest.begin());
          }
        }
        return Pregroup::make("rnd_inv", std::move(labels), 0, std::move(inv), {});
      }
      case 1: {
        int m = 2 + static_cast<int>(next_below(rng, 5));
        int n = 2 + static_cast<int>(next_below(rng, 5));
        int g = std::gcd(m, n);
        std::vector<int> divs;
        for (int d = 1; d <= g; ++d)
          if (g % d == 0) divs.push_back(d);
        int k = divs[next_below(rng, divs.size())];
        return make_amalgam_cyclic(m, n, k);
      }
      default: {
        if (next_below(rng, 2) == 0) return make_hnn_slice_klein();
        // slice over Z2 with A = B = full group, phi = id (Z2 x Z shape)
        return make_hnn_slice("hnn_slice_z2", group_cyclic(2, 'h'), {0, 1}, {0, 1});
      }
    }
  }();
  // shuffle the declaration order; the abstract table is unchanged
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  for (int i = p.size() - 1; i > 0; --i)
    std::swap(order[i], order[next_below(rng, i + 1)]);
  return p.permuted(order);
}

Pregroup make_random_raw(std::uint64_t seed, int size) {
  std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ull + 7);
  if (size < 2) size = 2;
  int n = size;
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Elem> inv(n);
  std::iota(inv.begin(), inv.end(), 0);
  for (int i = 1; i + 1 < n; ++i)
    if (inv[i] == i && next_below(rng, 2)) {
      // pair i with a later unpaired element
      for (int j = i + 1; j < n; ++j)
        if (inv[j] == j) {
          inv[i] = j;
          inv[j] = i;
          break;
        }
    }
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, -1);
  for (Elem u = 0; u < n; ++u) {
    table[0 * n + u] = u;
    table[u * n + 0] = u;
    table[u * n + inv[u]] = 0;
    table[inv[u] * n + u] = 0;
  }
  // sprinkle extra entries, sometimes in inverse-symmetric pairs
  int extra = static_cast<int>(next_below(rng, n + 2));
  for (int i = 0; i < extra; ++i) {
    Elem x = 1 + static_cast<Elem>(next_below(rng, n - 1));
    Elem y = 1 + static_cast<Elem>(next_below(rng, n - 1));
    Elem z = static_cast<Elem>(next_below(rng, n));
    if (table[x * n + y] >= 0) continue;
    table[x * n + y] = z;
    if (next_below(rng, 2)) {
      Elem yx = inv[y], xx = inv[x];
      if (table[yx * n + xx] < 0) table[yx * n + xx] = inv[z];
    }
  }
  // occasionally corrupt a forced row
  if (next_below(rng, 3) == 0) {
    Elem x = static_cast<Elem>(next_below(rng, n));
    Elem y = next_below(rng, 2) ? 0 : inv[x];
    table[x * n + y] = static_cast<Elem>(next_below(rng, n));
  }
  return Pregroup::raw("raw_random_" + std::to_string(seed), std::move(labels), 0,
                       std::move(inv), std::move(table));
}

Pregroup make_example(const std::vector<std::string>& args) {
  auto usage = []() -> Pregroup {
    throw ParseError(0,
                     "expected: free <rank> | group s3 | group z <n> | group klein4 | "
                     "amalgam <m> <n> <k> | hnn-slice | random <seed> <size> [raw]");
  };
  if (args.empty()) return usage();
  const std::string& kind = args[0];
  try {
    if (kind == "free" && args.size() == 2) return make_free(std::stoi(args[1]));
    if (kind == "group" && args.size() >= 2) {
      if (args[1] == "s3" && args.size() == 2) return make_group("s3", group_s3());
      if (args[1] == "klein4" && args.size() == 2)
        return make_group("klein4", group_klein4());
      if (args[1] == "z" && args.size() == 3) {
        int n = std::stoi(args[2]);
        return make_group("z" + std::to_string(n), group_cyclic(n));
      }
      return usage();
    }
    if (kind == "amalgam" && args.size() == 4)
      return make_amalgam_cyclic(std::stoi(args[1]), std::stoi(args[2]),
                                 std::stoi(args[3]));
    if (kind == "hnn-slice" && args.size() == 1) return make_hnn_slice_klein();
    if (kind == "random" && (args.size() == 3 || args.size() == 4)) {
      std::uint64_t seed = std::stoull(args[1]);
      int size = std::stoi(args[2]);
      if (args.size() == 4) {
        if (args[3] != "raw") return usage();
        return make_random_raw(seed, size);
      }
      return make_random_valid(seed, size);
    }
  } catch (const std::invalid_argument&) {
    return usage();
  } catch (const std::out_of_range&) {
    return usage();
  }
  return usage();
}

}  // namespace pg
