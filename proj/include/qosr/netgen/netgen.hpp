#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qosr/graph/network.hpp"

namespace qosr {

struct GenParams {
  std::size_t nodes = 1;
  std::size_t edges = 0;  // undirected edges in the result
  std::uint64_t seed = 1;
  std::vector<DimKind> dims{DimKind::Weighted, DimKind::Weighted};
  std::vector<std::string> dim_names;  // optional
  // Inclusive integer range per dimension. Probabilistic values are drawn in
  // percent and stored as k/100.
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges{{1, 10}, {1, 10}};
};

// Scale-free undirected network by preferential attachment. Nodes n0..n{N-1}
// arrive one at a time; node i gets a quota of min(i, T_i - E_so_far) edges,
// T_i = round(E * i / (N - 1)), and sweeps the shuffled list of existing
// nodes it is not yet joined to, linking to v with probability
// (deg(v) + 1) / (|E| + |V|) until the quota is met. Throws
// std::invalid_argument for infeasible parameters.
Network generate(const GenParams& p);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;  // undirected
  double clustering = 0;  // mean local clustering, degree < 2 counts as 0
  double avg_shortest_path = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double avg_degree = 0;
  std::size_t diameter = 0;
  bool connected = true;
  std::size_t component_size = 0;  // nodes in the largest component
};

// Statistics of the underlying simple undirected graph. Path figures cover
// the largest connected component.
GraphStats stats(const Network& n);

}  // namespace qosr
