#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qosr/graph/hypergraph.hpp"
#include "qosr/unicast/paths.hpp"

namespace qosr {

struct TreeQuery {
  NodeIndex source = 0;
  std::vector<NodeIndex> receivers;  // sorted and deduplicated by the search
  // Non-empty: every connector's modality set must be a subset.
  std::vector<std::string> allowed_modalities;
  bool reach_filter = false;
  // Tree depth limit in hops; the network's default depth when unset.
  std::optional<std::size_t> max_depth;
  std::optional<Window> window;
  bool prune = true;
  std::size_t witness_cap = 4;
  std::optional<WeightProfile> weights;
};

struct TreeSolution {
  NodeIndex root = 0;
  // Internal nodes map to their connector, receivers to their 0-connector.
  std::map<NodeIndex, Connector> chosen;
  std::vector<NodeIndex> leaves;  // sorted
  MultiCost cost;
  std::string encoding;  // "(n0 (n1 (n3) (n4)))", children sorted

  [[nodiscard]] std::size_t depth() const;

  friend bool operator<(const TreeSolution& a, const TreeSolution& b) { return a.encoding < b.encoding; }
  friend bool operator==(const TreeSolution& a, const TreeSolution& b) { return a.encoding == b.encoding; }
};

using TreeFrontier = Frontier<TreeSolution>;

struct BestTree {
  MultiCost cost;
  TreeSolution tree;
  std::vector<TreeSolution> witnesses;
};

// Notes produced while preparing a query (undeclared receivers...).
struct TreeNotes {
  std::vector<std::string> warnings;
};

// Non-dominated solution-tree costs from the source to all receivers. A
// receiver is always a leaf terminated by its 0-connector; undeclared
// receivers get cost one and a warning.
TreeFrontier pareto_trees(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s,
                          SearchStats* stats = nullptr, TreeNotes* notes = nullptr);

// Best tree under a totally ordered semiring; ties resolved by the smallest
// canonical encoding.
std::optional<BestTree> best_tree(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s,
                                  SearchStats* stats = nullptr, TreeNotes* notes = nullptr);

// best_tree with q.allowed_modalities non-empty.
std::optional<BestTree> modal_tree(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s,
                                   SearchStats* stats = nullptr, TreeNotes* notes = nullptr);

// Bottom-up cost: a leaf costs its 0-connector, an internal node combines
// its connector cost with its children's subtree costs. Throws
// ContractViolation naming the node on structural problems.
MultiCost tree_cost(const SemiringSpec& s, const TreeSolution& t);

// Every solution tree admitted by the query, sorted by encoding. Refuses
// beyond `guard` trees.
std::vector<TreeSolution> brute_force_trees(const Hypergraph& h, const TreeQuery& q, std::size_t guard = 5000);

// Canonical encoding of the tree rooted at `root` in `chosen`.
std::string encode_tree(const Network& n, NodeIndex root, const std::map<NodeIndex, Connector>& chosen);

}  // namespace qosr
