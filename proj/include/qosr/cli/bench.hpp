#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosr/unicast/paths.hpp"

namespace qosr::cli {

enum class BenchMode { BranchAndBound, Exhaustive };

struct BenchOptions {
  std::size_t queries = 50;
  std::uint64_t seed = 1;
  BenchMode mode = BenchMode::BranchAndBound;
  std::optional<WeightProfile> weights;  // uniform when unset
  std::optional<std::size_t> max_depth;
  // Exhaustive runs refuse once a query expands this many states.
  std::uint64_t state_budget = 5'000'000;
};

struct BenchRecord {
  std::string src, dst;
  double seconds = 0;
  std::optional<MultiCost> cost;
  std::optional<Rational> scalar;  // weighted sum when defined
  std::size_t depth = 0;
  std::uint64_t explored = 0;
  std::uint64_t pruned = 0;
};

struct BenchReport {
  std::size_t nodes = 0;
  std::vector<BenchRecord> records;
  double min_time = 0, max_time = 0, avg_time = 0;
  std::optional<double> avg_cost;
  double avg_depth = 0;
  std::size_t max_depth = 0;
  std::size_t unsolved = 0;

  // Recompute the aggregates from the records.
  void aggregate();
  [[nodiscard]] std::string table() const;
  [[nodiscard]] nlohmann::json to_json(bool with_records) const;
};

// Source/destination pairs drawn uniformly (distinct endpoints) from `seed`.
std::vector<std::pair<NodeIndex, NodeIndex>> bench_pairs(std::size_t nodes, std::size_t queries, std::uint64_t seed);

// Semiring used for benchmark queries: the ordered product under the given
// weights when every dimension is weighted and there is more than one,
// otherwise the network's own.
SemiringSpec bench_semiring(const Network& n, const std::optional<WeightProfile>& w);

// Runs the queries; throws OracleTooLarge when an exhaustive query exceeds
// the state budget.
BenchReport run_bench(const Network& n, const BenchOptions& opt);

}  // namespace qosr::cli
