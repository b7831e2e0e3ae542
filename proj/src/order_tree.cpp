#include "pg/order_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pg {

OrderTree order_tree(const Pregroup& p) {
  int n = p.size();
  OrderTree t;
  t.left_sets.resize(n);
  for (Elem x = 0; x < n; ++x) t.left_sets[x] = left_set(p, x);

  t.class_of.assign(n, -1);
  std::map<std::vector<Elem>, int> by_lset;
  for (Elem x = 0; x < n; ++x) {
    auto [it, fresh] = by_lset.try_emplace(t.left_sets[x], t.num_classes());
    if (fresh) t.blocks.emplace_back();
    t.class_of[x] = it->second;
    t.blocks[it->second].push_back(x);
  }
  // renumber classes by smallest member so ids are canonical
  int k = t.num_classes();
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.blocks[a][0] < t.blocks[b][0]; });
  std::vector<int> newid(k);
  for (int i = 0; i < k; ++i) newid[order[i]] = i;
  std::vector<std::vector<Elem>> blocks(k);
  for (int i = 0; i < k; ++i) blocks[newid[i]] = std::move(t.blocks[i]);
  t.blocks = std::move(blocks);
  for (Elem x = 0; x < n; ++x) t.class_of[x] = newid[t.class_of[x]];
  t.identity_class = t.class_of[p.identity()];

  // x <= y iff L(y) subset of L(x); strict when classes differ
  t.less.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& li = t.left_sets[t.blocks[i][0]];
      const auto& lj = t.left_sets[t.blocks[j][0]];
      t.less[i][j] = std::includes(li.begin(), li.end(), lj.begin(), lj.end());
    }

  // covering pairs: i < j with nothing strictly between
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!t.less[i][j]) continue;
      bool covering = true;
      for (int m = 0; m < k && covering; ++m)
        covering = !(t.less[i][m] && t.less[m][j]);
      if (covering) t.edges.emplace_back(i, j);
    }

  // heights: BFS from the identity class along covering edges, upward
  t.heights.assign(k, -1);
  t.heights[t.identity_class] = 0;
  std::deque<int> q{t.identity_class};
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (auto [lo, hi] : t.edges)
      if (lo == c && t.heights[hi] == -1) {
        t.heights[hi] = t.heights[c] + 1;
        q.push_back(hi);
      }
  }
  return t;
}

bool is_tree(const OrderTree& t, std::string* why) {
  int k = t.num_classes();
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(k, 0);
  std::deque<int> q{t.identity_class};
  seen[t.identity_class] = 1;
  int reached = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (int d : adj[c])
      if (!seen[d]) {
        seen[d] = 1;
        ++reached;
        q.push_back(d);
      }
  }
  if (reached != k) {
    if (why) {
      for (int c = 0; c < k; ++c)
        if (!seen[c]) {
          *why = "class of '" +
                 std::to_string(t.blocks[c][0]) + "' (block " + std::to_string(c) +
                 ") is disconnected from the identity class";
          break;
        }
    }
    return false;
  }
  if (static_cast<int>(t.edges.size()) != k - 1) {
    if (why)
      *why = "covering graph has " + std::to_string(t.edges.size()) +
             " edges on " + std::to_string(k) + " classes: contains a cycle";
    return false;
  }
  return true;
}

std::vector<std::vector<int>> tree_distances(const OrderTree& t) {
  std::string why;
  if (!is_tree(t, &why)) throw TreeError("order diagram is not a tree: " + why);
  int k = t.num_classes();
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(k, std::vector<int>(k, -1));
  for (int s = 0; s < k; ++s) {
    dist[s][s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int c = q.front();
      q.pop_front();
      for (int d : adj[c])
        if (dist[s][d] == -1) {
          dist[s][d] = dist[s][c] + 1;
          q.push_back(d);
        }
    }
  }
  return dist;
}

int tree_distance(const OrderTree& t, Elem x, Elem y) {
  return tree_distances(t)[t.class_of[x]][t.class_of[y]];
}

}  // namespace pg
