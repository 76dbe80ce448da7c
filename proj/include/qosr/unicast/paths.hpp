#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qosr/algebra/frontier.hpp"
#include "qosr/graph/network.hpp"

namespace qosr {

// Limit on one cost dimension: value <= limit or value >= limit.
struct Bound {
  enum class Op : std::uint8_t { Le, Ge };
  std::size_t dim = 0;
  Op op = Op::Le;
  Rational limit;

  [[nodiscard]] bool admits(const MultiCost& c) const { return op == Op::Le ? c[dim] <= limit : c[dim] >= limit; }
};

// Scalar interval [lo, hi] for window restarts.
struct Window {
  Rational lo;
  Rational hi;
};

struct SearchStats {
  std::uint64_t explored = 0;  // partial solutions expanded
  std::uint64_t pruned = 0;    // partial solutions cut by a bound
  std::uint32_t restarts = 0;  // window widenings
};

struct PathQuery {
  NodeIndex src = 0;
  NodeIndex dst = 0;
  std::vector<Bound> bounds;
  // Non-empty: only edges carrying one of these modalities are usable.
  std::vector<std::string> allowed_modalities;
  // With allowed_modalities: a single modality must serve every hop.
  bool uniform_modality = false;
  // Hop limit; the network's default depth when unset.
  std::optional<std::size_t> max_depth;
  std::optional<Window> window;
  bool prune = true;
  std::size_t witness_cap = 4;
  // Give up with OracleTooLarge after this many expansions (0 = no limit).
  std::uint64_t max_states = 0;
  // Scalarisation used by window restarts on multi-dimensional weighted
  // costs; uniform when unset.
  std::optional<WeightProfile> weights;
};

struct PathSolution {
  std::vector<NodeIndex> nodes;
  MultiCost cost;
  // Modality used on each hop ("" when the edge has none).
  std::vector<std::string> modalities_used;

  [[nodiscard]] std::size_t depth() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  friend bool operator==(const PathSolution& a, const PathSolution& b) {
    return a.nodes == b.nodes && a.modalities_used == b.modalities_used && a.cost == b.cost;
  }
  // Witness order: node sequence, then modalities.
  friend bool operator<(const PathSolution& a, const PathSolution& b) {
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.modalities_used < b.modalities_used;
  }
};

using PathFrontier = Frontier<PathSolution>;

struct BestPath {
  MultiCost cost;
  PathSolution path;                    // smallest witness
  std::vector<PathSolution> witnesses;  // all kept witnesses of that cost
};

// Raised when a search that needs a total order gets a partial one.
class PartialOrderError : public UnsupportedConfiguration {
 public:
  using UnsupportedConfiguration::UnsupportedConfiguration;
};

// Raised by the brute-force oracles when the instance is too large.
class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-dominated simple-path costs from src to dst within the hop limit,
// each with up to witness_cap witnesses. A declared receiver cost at dst is
// combined onto every path.
PathFrontier pareto_paths(const Network& n, const PathQuery& q, const SemiringSpec& s, SearchStats* stats = nullptr);

// Best simple path. s must be totally ordered (one dimension or an ordered
// product). When an ordered product ties on the scalar with incomparable
// tuples, the tuple holding the smallest witness is returned.
std::optional<BestPath> best_path(const Network& n, const PathQuery& q, const SemiringSpec& s,
                                  SearchStats* stats = nullptr);

// Every simple path meeting all bounds, sorted by cost then node sequence.
std::vector<PathSolution> constrained_paths(const Network& n, const PathQuery& q, const SemiringSpec& s,
                                            SearchStats* stats = nullptr);

// best_path restricted to q.allowed_modalities (which must be non-empty).
std::optional<BestPath> modal_best_path(const Network& n, const PathQuery& q, const SemiringSpec& s,
                                        SearchStats* stats = nullptr);

// Plain depth-first enumeration of all simple src->dst paths with at most
// max_depth hops, in lexicographic order. Refuses beyond `guard` paths.
std::vector<PathSolution> brute_force_paths(const Network& n, NodeIndex src, NodeIndex dst, std::size_t max_depth,
                                            std::size_t guard = 2000);

// Combine-fold of hop costs along `nodes` (using the cheapest-index edge
// per hop carrying the recorded modality), plus dst's receiver cost.
MultiCost path_cost(const Network& n, const SemiringSpec& s, const PathSolution& p);

// Scalar used for windows and reports: the value itself for one weighted
// dimension, the weighted sum for all-weighted costs; nullopt otherwise.
std::optional<Rational> cost_scalar(const SemiringSpec& s, const MultiCost& c,
                                    const std::optional<WeightProfile>& w = std::nullopt);

}  // namespace qosr
