#include "qosr/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "qosr/algebra/random.hpp"
#include "qosr/cli/output.hpp"

namespace qosr::cli {

std::vector<std::pair<NodeIndex, NodeIndex>> bench_pairs(std::size_t nodes, std::size_t queries, std::uint64_t seed) {
  if (nodes < 2) throw std::invalid_argument("benchmark needs at least two nodes");
  Rng rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (std::size_t i = 0; i < queries; ++i) {
    auto src = static_cast<NodeIndex>(uniform_below(rng, nodes));
    auto dst = static_cast<NodeIndex>(uniform_below(rng, nodes - 1));
    if (dst >= src) ++dst;
    out.emplace_back(src, dst);
  }
  return out;
}

SemiringSpec bench_semiring(const Network& n, const std::optional<WeightProfile>& w) {
  const SemiringSpec& s = n.spec();
  bool weighted = std::all_of(s.kinds().begin(), s.kinds().end(), [](DimKind k) { return k == DimKind::Weighted; });
  if (weighted && s.dims() > 1) return ordered_weighted(s, w ? *w : WeightProfile::uniform(s.dims()));
  return s;
}

BenchReport run_bench(const Network& n, const BenchOptions& opt) {
  if (opt.queries == 0) throw std::invalid_argument("benchmark needs at least one query");
  SemiringSpec s = bench_semiring(n, opt.weights);
  BenchReport rep;
  rep.nodes = n.node_count();
  for (auto [src, dst] : bench_pairs(n.node_count(), opt.queries, opt.seed)) {
    PathQuery q;
    q.src = src;
    q.dst = dst;
    q.max_depth = opt.max_depth;
    q.prune = opt.mode == BenchMode::BranchAndBound;
    q.witness_cap = 1;
    q.weights = opt.weights;
    if (opt.mode == BenchMode::Exhaustive) q.max_states = opt.state_budget;
    SearchStats st;
    BenchRecord rec;
    rec.src = n.name(src);
    rec.dst = n.name(dst);
    auto t0 = std::chrono::steady_clock::now();
    if (s.totally_ordered()) {
      if (auto best = best_path(n, q, s, &st)) {
        rec.cost = best->cost;
        rec.depth = best->path.depth();
      }
    } else {
      auto f = pareto_paths(n, q, s, &st);
      if (!f.empty()) {
        rec.cost = f.entries.front().cost;
        rec.depth = f.entries.front().witnesses.front().depth();
      }
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (rec.cost) rec.scalar = cost_scalar(s, *rec.cost, opt.weights);
    rec.explored = st.explored;
    rec.pruned = st.pruned;
    rep.records.push_back(std::move(rec));
  }
  rep.aggregate();
  return rep;
}

void BenchReport::aggregate() {
  min_time = max_time = avg_time = 0;
  avg_cost.reset();
  avg_depth = 0;
  max_depth = 0;
  unsolved = 0;
  if (records.empty()) return;
  min_time = records.front().seconds;
  double cost_sum = 0;
  std::size_t cost_n = 0, solved = 0;
  for (const auto& r : records) {
    min_time = std::min(min_time, r.seconds);
    max_time = std::max(max_time, r.seconds);
    avg_time += r.seconds;
    if (!r.cost) {
      ++unsolved;
      continue;
    }
    ++solved;
    avg_depth += static_cast<double>(r.depth);
    max_depth = std::max(max_depth, r.depth);
    if (r.scalar) {
      cost_sum += static_cast<double>(r.scalar->num()) / static_cast<double>(r.scalar->den());
      ++cost_n;
    }
  }
  avg_time /= static_cast<double>(records.size());
  if (solved) avg_depth /= static_cast<double>(solved);
  if (cost_n) avg_cost = cost_sum / static_cast<double>(cost_n);
}

std::string BenchReport::table() const {
  char row[256];
  std::snprintf(row, sizeof row, "%-6s %-9s %-9s %-9s %-9s %-9s %-9s\n", "Nodes", "Min Time", "Max Time", "Avg Time",
                "Avg Cost", "Avg Depth", "Max Depth");
  std::string out = row;
  char cost[32] = "-";
  if (avg_cost) std::snprintf(cost, sizeof cost, "%.2f", *avg_cost);
  char t_min[32], t_max[32], t_avg[32];
  std::snprintf(t_min, sizeof t_min, "%.3fs", min_time);
  std::snprintf(t_max, sizeof t_max, "%.3fs", max_time);
  std::snprintf(t_avg, sizeof t_avg, "%.3fs", avg_time);
  std::snprintf(row, sizeof row, "%-6zu %-9s %-9s %-9s %-9s %-9.2f %-9zu\n", nodes, t_min, t_max, t_avg, cost, avg_depth,
                max_depth);
  out += row;
  if (unsolved) out += std::to_string(unsolved) + " queries without a path\n";
  return out;
}

nlohmann::json BenchReport::to_json(bool with_records) const {
  nlohmann::json j = {{"nodes", nodes},         {"min_time", min_time},   {"max_time", max_time},
                      {"avg_time", avg_time},   {"avg_depth", avg_depth}, {"max_depth", max_depth},
                      {"unsolved", unsolved},   {"queries", records.size()}};
  j["avg_cost"] = avg_cost ? nlohmann::json(*avg_cost) : nlohmann::json(nullptr);
  if (with_records) {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : records) {
      rs.push_back({{"src", r.src},
                    {"dst", r.dst},
                    {"time", r.seconds},
                    {"cost", r.cost ? cost_json(*r.cost) : nlohmann::json(nullptr)},
                    {"depth", r.depth},
                    {"explored", r.explored},
                    {"pruned", r.pruned}});
    }
    j["records"] = rs;
  }
  return j;
}

}  // namespace qosr::cli
