#include "qosr/unicast/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace qosr {
namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct Hop {
  EdgeIndex edge;
  NodeIndex dst;
  std::string mod;
};

using HopTable = std::vector<std::vector<Hop>>;

// Usable hops per node. `only` restricts to edges carrying that modality;
// `allowed` (per-arc mode) to edges carrying any of them.
HopTable hop_table(const Network& n, const std::vector<std::string>& allowed, const std::string* only) {
  HopTable table(n.node_count());
  for (NodeIndex u = 0; u < n.node_count(); ++u) {
    for (EdgeIndex e : n.out_edges(u)) {
      const Edge& edge = n.edge(e);
      std::string mod;
      if (only) {
        if (!std::binary_search(edge.modalities.begin(), edge.modalities.end(), *only)) continue;
        mod = *only;
      } else if (!allowed.empty()) {
        auto it = std::find_if(edge.modalities.begin(), edge.modalities.end(), [&](const std::string& m) {
          return std::find(allowed.begin(), allowed.end(), m) != allowed.end();
        });
        if (it == edge.modalities.end()) continue;
        mod = *it;
      } else if (!edge.modalities.empty()) {
        mod = edge.modalities.front();
      }
      table[u].push_back(Hop{e, edge.dst, std::move(mod)});
    }
    std::stable_sort(table[u].begin(), table[u].end(), [](const Hop& a, const Hop& b) {
      if (a.dst != b.dst) return a.dst < b.dst;
      return a.mod < b.mod;
    });
  }
  return table;
}

bool better_value(DimKind k, const Rational& a, const Rational& b) {
  return k == DimKind::Weighted ? a < b : a > b;
}

// Best achievable value per dimension from every node to dst (ignoring the
// other dimensions), by Dijkstra in each single-dimension semiring.
std::vector<MultiCost> dimension_bounds(const Network& n, const SemiringSpec& s, const HopTable& hops, NodeIndex dst) {
  std::size_t nodes = n.node_count();
  std::vector<MultiCost> lb(nodes, s.zero());
  std::vector<std::vector<std::pair<NodeIndex, EdgeIndex>>> rev(nodes);
  for (NodeIndex u = 0; u < nodes; ++u) {
    for (const Hop& h : hops[u]) rev[h.dst].push_back({u, h.edge});
  }
  for (std::size_t d = 0; d < s.dims(); ++d) {
    DimKind k = s.kind(d);
    std::vector<Rational> best(nodes, dim_zero(k));
    std::vector<bool> done(nodes, false);
    best[dst] = dim_one(k);
    while (true) {
      std::size_t pick = nodes;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (done[v] || best[v] == dim_zero(k)) continue;
        if (pick == nodes || better_value(k, best[v], best[pick])) pick = v;
      }
      if (pick == nodes) break;
      done[pick] = true;
      for (auto [u, e] : rev[pick]) {
        Rational cand = dim_combine(k, n.edge(e).cost[d], best[pick]);
        if (better_value(k, cand, best[u])) best[u] = cand;
      }
    }
    for (std::size_t v = 0; v < nodes; ++v) lb[v][d] = best[v];
  }
  return lb;
}

// Least weighted sum from every node to dst.
std::vector<std::optional<Rational>> scalar_bounds(const Network& n, const HopTable& hops, NodeIndex dst,
                                                   const std::vector<Rational>& w) {
  std::size_t nodes = n.node_count();
  std::vector<std::optional<Rational>> best(nodes);
  std::vector<bool> done(nodes, false);
  std::vector<std::vector<std::pair<NodeIndex, EdgeIndex>>> rev(nodes);
  for (NodeIndex u = 0; u < nodes; ++u) {
    for (const Hop& h : hops[u]) rev[h.dst].push_back({u, h.edge});
  }
  best[dst] = Rational{0};
  while (true) {
    std::size_t pick = nodes;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (done[v] || !best[v]) continue;
      if (pick == nodes || *best[v] < *best[pick]) pick = v;
    }
    if (pick == nodes) break;
    done[pick] = true;
    for (auto [u, e] : rev[pick]) {
      Rational cand = weighted_sum(n.edge(e).cost, w) + *best[pick];
      if (!best[u] || cand < *best[u]) best[u] = cand;
    }
  }
  return best;
}

std::vector<std::size_t> hops_to(const Network& n, const HopTable& hops, NodeIndex dst) {
  std::vector<std::vector<NodeIndex>> rev(n.node_count());
  for (NodeIndex u = 0; u < n.node_count(); ++u) {
    for (const Hop& h : hops[u]) rev[h.dst].push_back(u);
  }
  std::vector<std::size_t> dist(n.node_count(), kUnreachable);
  std::deque<NodeIndex> queue{dst};
  dist[dst] = 0;
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop_front();
    for (NodeIndex u : rev[v]) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

bool all_weighted(const SemiringSpec& s) {
  return std::all_of(s.kinds().begin(), s.kinds().end(), [](DimKind k) { return k == DimKind::Weighted; });
}

std::vector<Rational> scalar_weights(const SemiringSpec& s, const std::optional<WeightProfile>& w) {
  if (s.order_weights()) return s.order_weights()->weights;
  if (w) return w->weights;
  return std::vector<Rational>(s.dims(), Rational{1});
}

// Depth-first search over simple paths in lexicographic order. Either keeps
// a frontier or collects every admissible path.
class PathSearch {
 public:
  PathSearch(const Network& n, const SemiringSpec& s, const PathQuery& q, const HopTable& hops, bool collect_all,
             std::optional<Rational> cap)
      : n_(n), s_(s), q_(q), hops_(hops), collect_all_(collect_all), cap_(std::move(cap)) {
    if (q.src >= n.node_count() || q.dst >= n.node_count()) throw ContractViolation("path endpoint out of range");
    depth_limit_ = q.max_depth ? *q.max_depth : default_depth(n);
    if (depth_limit_ == 0) throw ContractViolation("max_depth must be at least 1");
    terminal_ = n.receiver_cost(q.dst).value_or(s.one());
    frontier_.witness_cap = q.witness_cap;
    for (const Bound& b : q.bounds) {
      if (b.dim >= s.dims()) throw ContractViolation("bound dimension out of range");
    }
    if (all_weighted(s)) {
      weights_ = scalar_weights(s, q.weights);
      terminal_scalar_ = weighted_sum(terminal_, *weights_);
    }
    if (q.prune) {
      hop_ = hops_to(n, hops, q.dst);
      lb_ = dimension_bounds(n, s, hops, q.dst);
      if (weights_) scalar_lb_ = scalar_bounds(n, hops, q.dst, *weights_);
    }
    visited_.assign(n.node_count(), false);
  }

  void run() {
    path_.nodes = {q_.src};
    path_.modalities_used.clear();
    visited_[q_.src] = true;
    dfs(q_.src, s_.one());
    visited_[q_.src] = false;
  }

  PathFrontier& frontier() { return frontier_; }
  std::vector<PathSolution>& collected() { return collected_; }
  SearchStats& stats() { return stats_; }

 private:
  bool cut_by_cap(const Rational& scalar) const { return cap_ && scalar > *cap_; }

  void finish(const MultiCost& p) {
    MultiCost total = s_.combine(p, terminal_);
    for (const Bound& b : q_.bounds) {
      if (!b.admits(total)) return;
    }
    if (weights_ && cut_by_cap(weighted_sum(total, *weights_))) return;
    path_.cost = total;
    if (collect_all_) {
      collected_.push_back(path_);
    } else {
      frontier_insert(s_, frontier_, total, path_);
    }
  }

  // True when no completion of the partial path reaching v with cost p can
  // matter.
  bool hopeless(NodeIndex v, std::size_t depth, const MultiCost& p) const {
    if (hop_[v] == kUnreachable || depth + hop_[v] > depth_limit_) return true;
    MultiCost opt = s_.combine(s_.combine(p, lb_[v]), terminal_);
    for (const Bound& b : q_.bounds) {
      DimKind k = s_.kind(b.dim);
      bool monotone = (k == DimKind::Weighted) == (b.op == Bound::Op::Le);
      if (monotone && !b.admits(opt)) return true;
    }
    if (weights_ && scalar_lb_[v]) {
      Rational bound = weighted_sum(p, *weights_) + *scalar_lb_[v] + *terminal_scalar_;
      if (cut_by_cap(bound)) return true;
      if (!collect_all_ && s_.is_ordered() && !frontier_.empty() &&
          bound > weighted_sum(frontier_.entries.front().cost, *weights_)) {
        return true;
      }
    }
    if (!collect_all_ && (frontier_.dominated(s_, opt) || frontier_.saturated_equal(s_, opt))) return true;
    return false;
  }

  void dfs(NodeIndex u, const MultiCost& p) {
    ++stats_.explored;
    if (q_.max_states && stats_.explored > q_.max_states) {
      throw OracleTooLarge("search exceeded " + std::to_string(q_.max_states) + " states");
    }
    if (u == q_.dst) {
      finish(p);
      return;
    }
    std::size_t depth = path_.nodes.size() - 1;
    if (depth >= depth_limit_) return;
    for (const Hop& h : hops_[u]) {
      NodeIndex v = h.dst;
      if (visited_[v]) continue;
      MultiCost next = s_.combine(p, n_.edge(h.edge).cost);
      if (q_.prune) {
        if (hopeless(v, depth + 1, next)) {
          ++stats_.pruned;
          continue;
        }
      } else if (weights_ && cut_by_cap(weighted_sum(next, *weights_))) {
        ++stats_.pruned;
        continue;
      }
      visited_[v] = true;
      path_.nodes.push_back(v);
      path_.modalities_used.push_back(h.mod);
      dfs(v, next);
      path_.nodes.pop_back();
      path_.modalities_used.pop_back();
      visited_[v] = false;
    }
  }

  const Network& n_;
  const SemiringSpec& s_;
  const PathQuery& q_;
  const HopTable& hops_;
  bool collect_all_;
  std::optional<Rational> cap_;
  std::size_t depth_limit_ = 0;
  MultiCost terminal_;
  std::optional<std::vector<Rational>> weights_;
  std::optional<Rational> terminal_scalar_;
  std::vector<std::size_t> hop_;
  std::vector<MultiCost> lb_;
  std::vector<std::optional<Rational>> scalar_lb_;
  std::vector<bool> visited_;
  PathSolution path_;
  PathFrontier frontier_;
  std::vector<PathSolution> collected_;
  SearchStats stats_;
};

// Hop tables for the query: one per modality in uniform mode.
std::vector<HopTable> tables_for(const Network& n, const PathQuery& q) {
  std::vector<HopTable> out;
  if (q.uniform_modality && !q.allowed_modalities.empty()) {
    std::vector<std::string> mods = q.allowed_modalities;
    std::sort(mods.begin(), mods.end());
    mods.erase(std::unique(mods.begin(), mods.end()), mods.end());
    for (const auto& m : mods) out.push_back(hop_table(n, {}, &m));
  } else {
    out.push_back(hop_table(n, q.allowed_modalities, nullptr));
  }
  return out;
}

void add_stats(SearchStats* into, const SearchStats& s) {
  if (!into) return;
  into->explored += s.explored;
  into->pruned += s.pruned;
  into->restarts += s.restarts;
}

PathFrontier search_frontier(const Network& n, const PathQuery& q, const SemiringSpec& s,
                             const std::optional<Rational>& cap, SearchStats* stats) {
  PathFrontier out;
  out.witness_cap = q.witness_cap;
  for (const HopTable& table : tables_for(n, q)) {
    PathSearch search(n, s, q, table, false, cap);
    search.run();
    frontier_merge(s, out, search.frontier());
    add_stats(stats, search.stats());
  }
  return out;
}

}  // namespace

std::optional<Rational> cost_scalar(const SemiringSpec& s, const MultiCost& c, const std::optional<WeightProfile>& w) {
  if (!all_weighted(s) || c.size() != s.dims()) return std::nullopt;
  return weighted_sum(c, scalar_weights(s, w));
}

PathFrontier pareto_paths(const Network& n, const PathQuery& q, const SemiringSpec& s, SearchStats* stats) {
  return search_frontier(n, q, s, std::nullopt, stats);
}

std::optional<BestPath> best_path(const Network& n, const PathQuery& q, const SemiringSpec& s, SearchStats* stats) {
  if (!s.totally_ordered()) {
    throw PartialOrderError("best path needs a totally ordered semiring; use the Pareto search for " + s.describe());
  }
  PathFrontier f;
  if (q.window && all_weighted(s)) {
    Rational lo = q.window->lo;
    Rational hi = q.window->hi;
    if (hi < lo) throw ContractViolation("window upper end below lower end");
    auto w = scalar_weights(s, q.weights);
    Rational ceiling = weighted_sum(n.receiver_cost(q.dst).value_or(s.one()), w);
    for (const Edge& e : n.edges()) ceiling += weighted_sum(e.cost, w);
    SearchStats local;
    while (true) {
      f = search_frontier(n, q, s, hi, &local);
      if (!f.empty() || hi >= ceiling) break;
      hi = hi + (hi - lo + Rational{1});
      ++local.restarts;
    }
    add_stats(stats, local);
  } else {
    f = search_frontier(n, q, s, std::nullopt, stats);
  }
  if (f.empty()) return std::nullopt;
  const auto* pick = &f.entries.front();
  for (const auto& e : f.entries) {
    if (e.witnesses.front() < pick->witnesses.front()) pick = &e;
  }
  return BestPath{pick->cost, pick->witnesses.front(), pick->witnesses};
}

std::vector<PathSolution> constrained_paths(const Network& n, const PathQuery& q, const SemiringSpec& s,
                                            SearchStats* stats) {
  std::vector<PathSolution> out;
  for (const HopTable& table : tables_for(n, q)) {
    PathSearch search(n, s, q, table, true, std::nullopt);
    search.run();
    auto& got = search.collected();
    out.insert(out.end(), got.begin(), got.end());
    add_stats(stats, search.stats());
  }
  std::sort(out.begin(), out.end(), [](const PathSolution& a, const PathSolution& b) {
    if (!(a.cost == b.cost)) return a.cost < b.cost;
    return a < b;
  });
  return out;
}

std::optional<BestPath> modal_best_path(const Network& n, const PathQuery& q, const SemiringSpec& s,
                                        SearchStats* stats) {
  if (q.allowed_modalities.empty()) throw ContractViolation("modal search needs at least one allowed modality");
  return best_path(n, q, s, stats);
}

std::vector<PathSolution> brute_force_paths(const Network& n, NodeIndex src, NodeIndex dst, std::size_t max_depth,
                                            std::size_t guard) {
  const SemiringSpec& s = n.spec();
  MultiCost terminal = n.receiver_cost(dst).value_or(s.one());
  std::vector<PathSolution> out;
  std::vector<bool> seen(n.node_count(), false);
  PathSolution cur;
  cur.nodes = {src};
  seen[src] = true;
  auto rec = [&](auto& self, NodeIndex u, const MultiCost& acc) -> void {
    if (u == dst) {
      if (out.size() >= guard) throw OracleTooLarge("more than " + std::to_string(guard) + " simple paths");
      cur.cost = s.combine(acc, terminal);
      out.push_back(cur);
      return;
    }
    if (cur.nodes.size() - 1 >= max_depth) return;
    for (EdgeIndex e : n.out_edges(u)) {
      const Edge& edge = n.edge(e);
      if (seen[edge.dst]) continue;
      seen[edge.dst] = true;
      cur.nodes.push_back(edge.dst);
      cur.modalities_used.push_back(edge.modalities.empty() ? "" : edge.modalities.front());
      self(self, edge.dst, s.combine(acc, edge.cost));
      cur.nodes.pop_back();
      cur.modalities_used.pop_back();
      seen[edge.dst] = false;
    }
  };
  rec(rec, src, s.one());
  return out;
}

MultiCost path_cost(const Network& n, const SemiringSpec& s, const PathSolution& p) {
  if (p.nodes.empty()) throw ContractViolation("empty path");
  MultiCost acc = s.one();
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const std::string mod = i < p.modalities_used.size() ? p.modalities_used[i] : std::string();
    const Edge* found = nullptr;
    for (EdgeIndex e : n.out_edges(p.nodes[i])) {
      const Edge& edge = n.edge(e);
      if (edge.dst != p.nodes[i + 1]) continue;
      bool carries = mod.empty() ? true : std::binary_search(edge.modalities.begin(), edge.modalities.end(), mod);
      if (carries) {
        found = &edge;
        break;
      }
    }
    if (!found) {
      throw ContractViolation("no edge " + n.name(p.nodes[i]) + " -> " + n.name(p.nodes[i + 1]) +
                              (mod.empty() ? "" : " with modality " + mod));
    }
    acc = s.combine(acc, found->cost);
  }
  return s.combine(acc, n.receiver_cost(p.nodes.back()).value_or(s.one()));
}

}  // namespace qosr
