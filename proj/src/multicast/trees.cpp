#include "qosr/multicast/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

namespace qosr {
namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max() / 4;

bool all_weighted(const SemiringSpec& s) {
  return std::all_of(s.kinds().begin(), s.kinds().end(), [](DimKind k) { return k == DimKind::Weighted; });
}

std::vector<Rational> scalar_weights(const SemiringSpec& s, const std::optional<WeightProfile>& w) {
  if (s.order_weights()) return s.order_weights()->weights;
  if (w) return w->weights;
  return std::vector<Rational>(s.dims(), Rational{1});
}

class TreeSearch {
 public:
  TreeSearch(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s, bool collect_all,
             std::optional<Rational> cap, std::size_t guard, TreeNotes* notes)
      : h_(h), n_(h.network()), q_(q), s_(s), collect_all_(collect_all), cap_(std::move(cap)), guard_(guard) {
    std::size_t nodes = n_.node_count();
    if (q.source >= nodes) throw ContractViolation("tree source out of range");
    if (q.receivers.empty()) throw ContractViolation("tree query needs at least one receiver");
    receivers_ = q.receivers;
    std::sort(receivers_.begin(), receivers_.end());
    receivers_.erase(std::unique(receivers_.begin(), receivers_.end()), receivers_.end());
    is_receiver_.assign(nodes, false);
    zero_.resize(nodes);
    for (NodeIndex r : receivers_) {
      if (r >= nodes) throw ContractViolation("tree receiver out of range");
      is_receiver_[r] = true;
      if (n_.is_receiver(r)) {
        zero_[r] = zero_connector(n_, r);
      } else {
        Connector c;
        c.input = r;
        c.cost = s.one();
        zero_[r] = c;
        if (notes) notes->warnings.push_back("'" + n_.name(r) + "' is not a declared receiver; using cost one");
      }
    }
    depth_limit_ = q.max_depth ? *q.max_depth : default_depth(n_);
    if (depth_limit_ == 0) throw ContractViolation("max_depth must be at least 1");
    frontier_.witness_cap = q.witness_cap;
    filter_.allowed_modalities = q.allowed_modalities;
    filter_.include_zero = false;
    if (q.reach_filter) {
      bool universal = false;
      for (NodeIndex r : receivers_) {
        if (!n_.region(r)) {
          universal = true;
        } else {
          filter_.reach.push_back(*n_.region(r));
        }
      }
      if (universal) filter_.reach.clear();
    }
    if (all_weighted(s)) weights_ = scalar_weights(s, q.weights);
    // Hop distance from every node to the nearest receiver.
    to_receiver_.assign(nodes, kFar);
    std::deque<NodeIndex> queue;
    for (NodeIndex r : receivers_) {
      to_receiver_[r] = 0;
      queue.push_back(r);
    }
    while (!queue.empty()) {
      NodeIndex v = queue.front();
      queue.pop_front();
      for (EdgeIndex e : n_.in_edges(v)) {
        NodeIndex u = n_.edge(e).src;
        if (to_receiver_[u] == kFar) {
          to_receiver_[u] = to_receiver_[v] + 1;
          queue.push_back(u);
        }
      }
    }
    in_tree_.assign(nodes, false);
    depth_.assign(nodes, 0);
  }

  void run() {
    NodeIndex src = q_.source;
    if (is_receiver_[src]) {
      // A receiver is a leaf, so the source can only serve itself.
      if (receivers_.size() == 1) {
        chosen_[src] = zero_[src];
        record(zero_[src].cost);
        chosen_.clear();
      }
      return;
    }
    in_tree_[src] = true;
    open_.push_back(src);
    remaining_ = receivers_.size();
    dfs(s_.one());
  }

  TreeFrontier& frontier() { return frontier_; }
  std::vector<TreeSolution>& collected() { return collected_; }
  SearchStats& stats() { return stats_; }

 private:
  bool over_cap(const MultiCost& c) const { return weights_ && cap_ && weighted_sum(c, *weights_) > *cap_; }

  void record(const MultiCost& cost) {
    if (over_cap(cost)) return;
    TreeSolution t;
    t.root = q_.source;
    t.chosen = chosen_;
    t.leaves = receivers_;
    t.cost = cost;
    t.encoding = encode_tree(n_, q_.source, chosen_);
    if (collect_all_) {
      if (collected_.size() >= guard_) throw OracleTooLarge("more than " + std::to_string(guard_) + " solution trees");
      collected_.push_back(std::move(t));
    } else {
      frontier_insert(s_, frontier_, cost, t);
    }
  }

  void dfs(const MultiCost& p) {
    ++stats_.explored;
    if (open_.empty()) {
      if (remaining_ == 0) record(p);
      return;
    }
    NodeIndex u = open_.back();
    open_.pop_back();
    std::size_t d = depth_[u];
    if (d < depth_limit_ && remaining_ > open_.size()) expand(u, d, p);
    open_.push_back(u);
  }

  void expand(NodeIndex u, std::size_t d, const MultiCost& p) {
    ConnectorFilter f = filter_;
    f.max_width = remaining_ - open_.size();
    f.allowed_outputs.assign(n_.node_count(), false);
    for (NodeIndex v = 0; v < n_.node_count(); ++v) {
      if (in_tree_[v]) continue;
      if (q_.prune && !is_receiver_[v] && d + 1 + to_receiver_[v] > depth_limit_) continue;
      f.allowed_outputs[v] = true;
    }
    ConnectorStream stream = h_.connectors_from(u, f);
    while (auto c = stream.next()) {
      MultiCost next = s_.combine(p, c->cost);
      for (NodeIndex v : c->outputs) {
        if (is_receiver_[v]) next = s_.combine(next, zero_[v].cost);
      }
      if (over_cap(next) || (q_.prune && !collect_all_ && frontier_.dominated(s_, next))) {
        ++stats_.pruned;
        continue;
      }
      chosen_[u] = *c;
      std::size_t pushed = 0;
      for (auto it = c->outputs.rbegin(); it != c->outputs.rend(); ++it) {
        NodeIndex v = *it;
        in_tree_[v] = true;
        depth_[v] = d + 1;
        if (is_receiver_[v]) {
          chosen_[v] = zero_[v];
          --remaining_;
        } else {
          open_.push_back(v);
          ++pushed;
        }
      }
      dfs(next);
      open_.resize(open_.size() - pushed);
      for (NodeIndex v : c->outputs) {
        in_tree_[v] = false;
        if (is_receiver_[v]) {
          chosen_.erase(v);
          ++remaining_;
        }
      }
      chosen_.erase(u);
    }
  }

  const Hypergraph& h_;
  const Network& n_;
  const TreeQuery& q_;
  const SemiringSpec& s_;
  bool collect_all_;
  std::optional<Rational> cap_;
  std::size_t guard_;
  std::vector<NodeIndex> receivers_;
  std::vector<bool> is_receiver_;
  std::vector<Connector> zero_;
  std::size_t depth_limit_ = 0;
  ConnectorFilter filter_;
  std::optional<std::vector<Rational>> weights_;
  std::vector<std::size_t> to_receiver_;
  std::vector<bool> in_tree_;
  std::vector<std::size_t> depth_;
  std::vector<NodeIndex> open_;
  std::size_t remaining_ = 0;
  std::map<NodeIndex, Connector> chosen_;
  TreeFrontier frontier_;
  std::vector<TreeSolution> collected_;
  SearchStats stats_;
};

void add_stats(SearchStats* into, const SearchStats& s) {
  if (!into) return;
  into->explored += s.explored;
  into->pruned += s.pruned;
  into->restarts += s.restarts;
}

}  // namespace

std::size_t TreeSolution::depth() const {
  std::function<std::size_t(NodeIndex)> rec = [&](NodeIndex v) -> std::size_t {
    auto it = chosen.find(v);
    if (it == chosen.end()) return 0;
    std::size_t best = 0;
    for (NodeIndex c : it->second.outputs) best = std::max(best, 1 + rec(c));
    return best;
  };
  return rec(root);
}

std::string encode_tree(const Network& n, NodeIndex root, const std::map<NodeIndex, Connector>& chosen) {
  std::string out = "(" + n.name(root);
  auto it = chosen.find(root);
  if (it != chosen.end()) {
    for (NodeIndex c : it->second.outputs) out += " " + encode_tree(n, c, chosen);
  }
  return out + ")";
}

TreeFrontier pareto_trees(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s, SearchStats* stats,
                          TreeNotes* notes) {
  TreeSearch search(h, q, s, false, std::nullopt, 0, notes);
  search.run();
  add_stats(stats, search.stats());
  return std::move(search.frontier());
}

std::optional<BestTree> best_tree(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s, SearchStats* stats,
                                  TreeNotes* notes) {
  if (!s.totally_ordered()) {
    throw PartialOrderError("best tree needs a totally ordered semiring; use the Pareto search for " + s.describe());
  }
  TreeFrontier f;
  if (q.window && all_weighted(s)) {
    Rational lo = q.window->lo;
    Rational hi = q.window->hi;
    if (hi < lo) throw ContractViolation("window upper end below lower end");
    const Network& n = h.network();
    auto w = scalar_weights(s, q.weights);
    Rational ceiling{0};
    for (const Edge& e : n.edges()) ceiling += weighted_sum(e.cost, w);
    for (const auto& [node, cost] : n.receivers()) ceiling += weighted_sum(cost, w);
    SearchStats local;
    while (true) {
      TreeSearch search(h, q, s, false, hi, 0, notes);
      search.run();
      add_stats(&local, search.stats());
      f = std::move(search.frontier());
      if (!f.empty() || hi >= ceiling) break;
      hi = hi + (hi - lo + Rational{1});
      ++local.restarts;
      if (notes) notes->warnings.clear();
    }
    add_stats(stats, local);
  } else {
    f = pareto_trees(h, q, s, stats, notes);
  }
  if (f.empty()) return std::nullopt;
  const auto* pick = &f.entries.front();
  for (const auto& e : f.entries) {
    if (e.witnesses.front() < pick->witnesses.front()) pick = &e;
  }
  return BestTree{pick->cost, pick->witnesses.front(), pick->witnesses};
}

std::optional<BestTree> modal_tree(const Hypergraph& h, const TreeQuery& q, const SemiringSpec& s, SearchStats* stats,
                                   TreeNotes* notes) {
  if (q.allowed_modalities.empty()) throw ContractViolation("modal tree search needs at least one allowed modality");
  return best_tree(h, q, s, stats, notes);
}

MultiCost tree_cost(const SemiringSpec& s, const TreeSolution& t) {
  std::set<NodeIndex> seen;
  std::function<MultiCost(NodeIndex)> rec = [&](NodeIndex v) -> MultiCost {
    if (!seen.insert(v).second) throw ContractViolation("node #" + std::to_string(v) + " appears twice in the tree");
    auto it = t.chosen.find(v);
    if (it == t.chosen.end()) throw ContractViolation("node #" + std::to_string(v) + " has no connector");
    const Connector& c = it->second;
    if (c.input != v) throw ContractViolation("connector at node #" + std::to_string(v) + " starts elsewhere");
    MultiCost acc = c.cost;
    for (NodeIndex child : c.outputs) acc = s.combine(acc, rec(child));
    return acc;
  };
  MultiCost total = rec(t.root);
  if (seen.size() != t.chosen.size()) throw ContractViolation("tree has connectors unreachable from the root");
  return total;
}

std::vector<TreeSolution> brute_force_trees(const Hypergraph& h, const TreeQuery& q, std::size_t guard) {
  TreeQuery plain = q;
  plain.prune = false;
  plain.window.reset();
  TreeSearch search(h, plain, h.network().spec(), true, std::nullopt, guard, nullptr);
  search.run();
  auto out = std::move(search.collected());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qosr
