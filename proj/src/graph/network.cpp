#include "qosr/graph/network.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qosr {

bool valid_identifier(std::string_view token) {
  if (token.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(token.front())) return false;
  return std::all_of(token.begin(), token.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

// --- Network ---------------------------------------------------------------

std::optional<std::size_t> Network::dim_index(std::string_view name) const {
  for (std::size_t i = 0; i < dim_names_.size(); ++i) {
    if (dim_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<NodeIndex> Network::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<NodeIndex>(it - names_.begin());
}

NodeIndex Network::index(std::string_view name) const {
  auto n = find(name);
  if (!n) throw NetworkError("unknown node '" + std::string(name) + "'");
  return *n;
}

std::optional<MultiCost> Network::receiver_cost(NodeIndex n) const {
  auto it = receivers_.find(n);
  if (it == receivers_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Network& a, const Network& b) {
  auto same_edge = [](const Edge& x, const Edge& y) {
    return x.src == y.src && x.dst == y.dst && x.cost == y.cost && x.modalities == y.modalities && x.reach == y.reach;
  };
  return a.spec_ == b.spec_ && a.dim_names_ == b.dim_names_ && a.compose_ == b.compose_ &&
         a.undirected_ == b.undirected_ && a.origin_ == b.origin_ && a.names_ == b.names_ &&
         std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), same_edge) &&
         a.receivers_ == b.receivers_ && a.regions_ == b.regions_;
}

// --- NetworkBuilder --------------------------------------------------------

NetworkBuilder::NetworkBuilder(SemiringSpec spec, std::vector<std::string> dim_names)
    : spec_(std::move(spec)), dim_names_(std::move(dim_names)) {
  if (dim_names_.empty()) dim_names_.assign(spec_.dims(), "");
  if (dim_names_.size() != spec_.dims()) throw NetworkError("dimension name count does not match dimensions");
  std::set<std::string> seen;
  for (const auto& n : dim_names_) {
    if (n.empty()) continue;
    if (!valid_identifier(n)) throw NetworkError("invalid dimension name '" + n + "'");
    if (!seen.insert(n).second) throw NetworkError("duplicate dimension name '" + n + "'");
  }
}

void NetworkBuilder::set_undirected(bool u) {
  if (!edges_.empty()) throw NetworkError("undirected flag must precede edges");
  undirected_ = u;
}

void NetworkBuilder::add_node(std::string_view name) {
  if (!valid_identifier(name)) throw NetworkError("invalid node name '" + std::string(name) + "'");
  if (!nodes_.emplace(std::string(name), true).second) {
    throw NetworkError("duplicate node '" + std::string(name) + "'");
  }
}

void NetworkBuilder::require_node(std::string_view name) const {
  if (!nodes_.contains(name)) throw NetworkError("undeclared node '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> normalise_tokens(std::vector<std::string> tokens, const char* what) {
  for (const auto& t : tokens) {
    if (!valid_identifier(t)) throw NetworkError(std::string("invalid ") + what + " '" + t + "'");
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

bool disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

void check_cost(const SemiringSpec& s, const MultiCost& c, const std::string& where) {
  if (c.size() != s.dims()) {
    throw NetworkError(where + ": cost <" + c.to_string() + "> has " + std::to_string(c.size()) + " values, expected " +
                       std::to_string(s.dims()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!dim_in_carrier(s.kind(i), c[i])) {
      throw NetworkError(where + ": value " + c[i].to_string() + " is not a valid " + std::string(to_string(s.kind(i))) +
                         " value");
    }
  }
}

}  // namespace

void NetworkBuilder::insert_edge(PendingEdge e) {
  auto key = std::make_pair(e.src, e.dst);
  auto& slots = by_pair_[key];
  for (std::size_t idx : slots) {
    const auto& other = edges_[idx];
    if (e.modalities.empty() || other.modalities.empty() || !disjoint(e.modalities, other.modalities)) {
      throw NetworkError("duplicate edge " + e.src + " -> " + e.dst);
    }
  }
  slots.push_back(edges_.size());
  edges_.push_back(std::move(e));
}

void NetworkBuilder::add_edge(std::string_view src, std::string_view dst, const MultiCost& cost,
                              std::vector<std::string> modalities, std::vector<std::string> reach) {
  require_node(src);
  require_node(dst);
  if (src == dst) throw NetworkError("self-loop on '" + std::string(src) + "'");
  std::string where = "edge " + std::string(src) + " -> " + std::string(dst);
  check_cost(spec_, cost, where);
  PendingEdge e{std::string(src), std::string(dst), cost, normalise_tokens(std::move(modalities), "modality"),
                normalise_tokens(std::move(reach), "region")};
  if (undirected_) {
    PendingEdge twin{e.dst, e.src, e.cost, e.modalities, e.reach};
    insert_edge(std::move(e));
    insert_edge(std::move(twin));
  } else {
    insert_edge(std::move(e));
  }
}

void NetworkBuilder::add_receiver(std::string_view name, std::optional<MultiCost> cost) {
  require_node(name);
  if (cost) check_cost(spec_, *cost, "receiver " + std::string(name));
  if (!receivers_.emplace(std::string(name), cost).second) {
    throw NetworkError("receiver '" + std::string(name) + "' declared twice");
  }
}

void NetworkBuilder::set_region(std::string_view name, std::string_view label) {
  require_node(name);
  if (!valid_identifier(label)) throw NetworkError("invalid region '" + std::string(label) + "'");
  if (!regions_.emplace(std::string(name), std::string(label)).second) {
    throw NetworkError("region of '" + std::string(name) + "' declared twice");
  }
}

Network NetworkBuilder::build() const {
  Network n(spec_);
  n.dim_names_ = dim_names_;
  n.compose_ = compose_;
  n.undirected_ = undirected_;
  n.origin_ = origin_;
  for (const auto& [name, _] : nodes_) n.names_.push_back(name);  // std::map keeps them sorted
  auto idx = [&](const std::string& name) { return n.index(name); };
  for (const auto& e : edges_) n.edges_.push_back(Edge{idx(e.src), idx(e.dst), e.cost, e.modalities, e.reach});
  std::sort(n.edges_.begin(), n.edges_.end(), [](const Edge& a, const Edge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.modalities < b.modalities;
  });
  n.out_.assign(n.names_.size(), {});
  n.in_.assign(n.names_.size(), {});
  for (EdgeIndex i = 0; i < n.edges_.size(); ++i) {
    const Edge& e = n.edges_[i];
    n.out_[e.src].push_back(i);
    n.in_[e.dst].push_back(i);
    if (i > 0 && n.edges_[i - 1].src == e.src && n.edges_[i - 1].dst == e.dst) n.parallel_ = true;
  }
  for (const auto& [name, cost] : receivers_) n.receivers_.emplace(idx(name), cost ? *cost : spec_.one());
  n.regions_.assign(n.names_.size(), std::nullopt);
  for (const auto& [name, label] : regions_) n.regions_[idx(name)] = label;
  return n;
}

// --- free functions --------------------------------------------------------

MultiCost compose_parallel(const SemiringSpec& s, std::span<const MultiCost> costs, ComposeMode mode) {
  if (costs.empty()) throw ContractViolation("compose_parallel needs at least one cost");
  MultiCost out = costs.front();
  if (out.size() != s.dims()) throw ContractViolation("compose_parallel: cost arity mismatch");
  for (std::size_t j = 1; j < costs.size(); ++j) {
    const MultiCost& c = costs[j];
    if (c.size() != s.dims()) throw ContractViolation("compose_parallel: cost arity mismatch");
    for (std::size_t i = 0; i < s.dims(); ++i) {
      if (s.kind(i) == DimKind::Weighted) {
        out[i] = mode == ComposeMode::Sum ? out[i] + c[i] : std::max(out[i], c[i]);
      } else {
        out[i] = std::min(out[i], c[i]);
      }
    }
  }
  return out;
}

std::size_t hop_diameter(const Network& n) {
  std::size_t best = 0;
  std::vector<std::size_t> dist(n.node_count());
  for (NodeIndex s = 0; s < n.node_count(); ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    std::deque<NodeIndex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      NodeIndex u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (EdgeIndex e : n.out_edges(u)) {
        NodeIndex v = n.edge(e).dst;
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return best;
}

std::size_t default_depth(const Network& n) { return std::max<std::size_t>(1, 2 * hop_diameter(n)); }

}  // namespace qosr
