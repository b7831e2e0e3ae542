#pragma once

#include "pg/pregroup.hpp"

#include <string>
#include <vector>

namespace pg {

/// Raised when tree_distance is asked for distances in an order diagram that
/// is not a tree (cycle in the covering graph, or disconnected classes).
struct TreeError : std::runtime_error {
  explicit TreeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The quotient of P by L-set equality, ordered by reverse inclusion of
/// L-sets, together with its covering (Hasse) edges and heights measured
/// from the class of the identity, which is the unique minimum because
/// L(1) = P.
struct OrderTree {
  std::vector<int> class_of;                // element -> class id
  std::vector<std::vector<Elem>> blocks;    // class id -> members (sorted)
  std::vector<std::vector<bool>> less;      // less[i][j]: class i strictly below j
  std::vector<std::pair<int, int>> edges;   // covering pairs (lower, upper)
  std::vector<int> heights;                 // BFS depth from the identity class
  bool finite_height = true;                // always true on a finite carrier
  std::vector<std::vector<Elem>> left_sets; // element -> L(x) (sorted)

  int identity_class = 0;
  int num_classes() const { return static_cast<int>(blocks.size()); }
};

/// Build the order diagram of P.  Classes are numbered in canonical order of
/// their smallest member, except that the identity class always exists.
OrderTree order_tree(const Pregroup& p);

/// True when the covering graph is a tree (connected and acyclic).
/// When false and why is non-null, *why describes the offending cycle or
/// disconnected class.
bool is_tree(const OrderTree& t, std::string* why = nullptr);

/// Distance matrix between classes in the covering graph.  Throws TreeError
/// when the graph is not a tree.
std::vector<std::vector<int>> tree_distances(const OrderTree& t);

/// Distance between the classes of two elements.  Throws TreeError when the
/// covering graph is not a tree.
int tree_distance(const OrderTree& t, Elem x, Elem y);

}  // namespace pg
