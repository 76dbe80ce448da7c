#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qosr/graph/network.hpp"

namespace qosr {

// Hyperarc from one node to a sorted set of output nodes. Zero-connectors
// have no outputs and terminate a receiver.
struct Connector {
  NodeIndex input = 0;
  std::vector<NodeIndex> outputs;   // sorted ascending
  std::vector<EdgeIndex> members;   // one edge per output, same order
  MultiCost cost;
  std::vector<std::string> modalities;  // union over members
  std::vector<std::string> reach;       // union over members

  [[nodiscard]] bool is_zero() const { return outputs.empty(); }
};

// Restrictions applied while enumerating connectors. Empty sets mean no
// restriction.
struct ConnectorFilter {
  // Only these nodes may appear among the outputs (indexed by node).
  std::vector<bool> allowed_outputs;
  // Every member edge's modalities must be drawn from this set.
  std::vector<std::string> allowed_modalities;
  // A member edge whose reach set is non-empty and disjoint from this set
  // is dropped, so every emitted connector's reach meets it.
  std::vector<std::string> reach;
  std::size_t max_width = SIZE_MAX;
  // Emit a receiver's 0-connector before the others.
  bool include_zero = true;
};

class Hypergraph;

// Lazy enumeration of the connectors leaving one node: smallest cardinality
// first (the 0-connector of a receiver comes first), lexicographic by output
// indices within each cardinality.
class ConnectorStream {
 public:
  // Next connector, or nullopt when exhausted.
  std::optional<Connector> next();

 private:
  friend class Hypergraph;
  ConnectorStream(const Hypergraph& h, NodeIndex node, std::vector<EdgeIndex> candidates, std::size_t max_width,
                  bool zero_pending);

  const Hypergraph* h_;
  NodeIndex node_;
  std::vector<EdgeIndex> cand_;
  std::size_t max_width_;
  std::vector<std::size_t> pick_;  // indices into cand_, strictly increasing
  bool zero_pending_;
  bool done_ = false;
};

// And-or view of a network. Each node's connectors are the non-empty subsets
// of its forward star; they are built on demand.
class Hypergraph {
 public:
  // Rejects networks with parallel edges between the same pair.
  explicit Hypergraph(const Network& n);

  [[nodiscard]] const Network& network() const { return *net_; }

  [[nodiscard]] ConnectorStream connectors_from(NodeIndex node, const ConnectorFilter& filter = {}) const;

  // Connector for an explicit output set; nullopt unless every output is a
  // forward-star neighbour.
  [[nodiscard]] std::optional<Connector> connector(NodeIndex input, std::vector<NodeIndex> outputs) const;

  [[nodiscard]] Connector make_connector(NodeIndex input, const std::vector<EdgeIndex>& members) const;

 private:
  const Network* net_;
};

// Terminating connector of a declared receiver; its cost is the declared
// cost (one when none was given). Throws NetworkError for other nodes.
Connector zero_connector(const Network& n, NodeIndex node);

}  // namespace qosr
