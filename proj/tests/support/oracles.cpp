#include "support/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

using qosr::Edge;

Rational plus(DimKind k, const Rational& a, const Rational& b) {
  if (k == DimKind::Weighted) return a < b ? a : b;
  return a < b ? b : a;
}

Rational times(DimKind k, const Rational& a, const Rational& b) {
  switch (k) {
    case DimKind::Weighted:
      if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
      return a + b;
    case DimKind::Bandwidth:
    case DimKind::Boolean:
      return a < b ? a : b;
    case DimKind::Probabilistic:
      return a * b;
  }
  throw std::logic_error("kind");
}

Rational zero(DimKind k) { return k == DimKind::Weighted ? Rational::infinity() : Rational{0}; }

Rational one(DimKind k) {
  switch (k) {
    case DimKind::Weighted: return Rational{0};
    case DimKind::Bandwidth: return Rational::infinity();
    default: return Rational{1};
  }
}

bool no_worse(DimKind k, const Rational& a, const Rational& b) { return k == DimKind::Weighted ? a <= b : a >= b; }

MultiCost times(const std::vector<DimKind>& ks, const MultiCost& a, const MultiCost& b) {
  MultiCost out(ks.size(), Rational{0});
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = times(ks[i], a[i], b[i]);
  return out;
}

MultiCost zero(const std::vector<DimKind>& ks) {
  MultiCost out(ks.size(), Rational{0});
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = zero(ks[i]);
  return out;
}

MultiCost one(const std::vector<DimKind>& ks) {
  MultiCost out(ks.size(), Rational{0});
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = one(ks[i]);
  return out;
}

bool dominates(const std::vector<DimKind>& ks, const MultiCost& a, const MultiCost& b) {
  if (a == b) return false;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (!no_worse(ks[i], a[i], b[i])) return false;
  return true;
}

std::vector<MultiCost> pareto_filter(const std::vector<DimKind>& ks, std::vector<MultiCost> costs) {
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  MultiCost z = zero(ks);
  std::vector<MultiCost> out;
  for (const auto& c : costs) {
    if (c == z) continue;
    bool beaten = std::any_of(costs.begin(), costs.end(), [&](const MultiCost& d) { return dominates(ks, d, c); });
    if (!beaten) out.push_back(c);
  }
  return out;
}

Rational weighted_scalar(const MultiCost& c, const std::vector<Rational>& w) {
  Rational s{0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Rational{0}) continue;
    if (c[i].is_infinite()) return Rational::infinity();
    s = s + w[i] * c[i];
  }
  return s;
}

namespace {

Rational power_product(const MultiCost& c, const std::vector<Rational>& w) {
  Rational p{1};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_integer()) throw std::invalid_argument("integer exponents only");
    for (std::int64_t e = 0; e < w[i].num(); ++e) p = p * c[i];
  }
  return p;
}

}  // namespace

std::vector<MultiCost> scalar_best(const std::vector<DimKind>& ks, const std::vector<MultiCost>& costs,
                                   const std::vector<Rational>& w) {
  bool prob = ks.front() == DimKind::Probabilistic;
  std::optional<Rational> best;
  std::vector<MultiCost> out;
  for (const auto& c : costs) {
    Rational v = prob ? power_product(c, w) : weighted_scalar(c, w);
    bool better = !best || (prob ? v > *best : v < *best);
    if (better) {
      best = v;
      out.clear();
    }
    if (v == *best) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Path> all_paths(const Network& n, NodeIndex src, NodeIndex dst, std::size_t depth,
                            const std::vector<std::string>& allowed, bool uniform) {
  std::vector<DimKind> ks(n.spec().kinds().begin(), n.spec().kinds().end());
  MultiCost tail = one(ks);
  if (auto r = n.receiver_cost(dst)) tail = *r;
  std::vector<Path> out;

  // `only` fixes the modality in uniform mode.
  std::function<void(Path&, std::vector<bool>&, const std::string*)> walk = [&](Path& p, std::vector<bool>& on,
                                                                               const std::string* only) {
    NodeIndex u = p.nodes.back();
    if (u == dst) {
      Path done = p;
      done.cost = times(ks, p.cost, tail);
      out.push_back(std::move(done));
      return;
    }
    if (p.nodes.size() - 1 == depth) return;
    for (const Edge& e : n.edges()) {
      if (e.src != u || on[e.dst]) continue;
      std::string mod;
      if (only) {
        if (std::find(e.modalities.begin(), e.modalities.end(), *only) == e.modalities.end()) continue;
        mod = *only;
      } else if (!allowed.empty()) {
        std::vector<std::string> shared;
        for (const auto& m : e.modalities)
          if (std::find(allowed.begin(), allowed.end(), m) != allowed.end()) shared.push_back(m);
        if (shared.empty()) continue;
        mod = *std::min_element(shared.begin(), shared.end());
      } else if (!e.modalities.empty()) {
        mod = *std::min_element(e.modalities.begin(), e.modalities.end());
      }
      MultiCost saved = p.cost;
      p.nodes.push_back(e.dst);
      p.mods.push_back(mod);
      p.cost = times(ks, p.cost, e.cost);
      on[e.dst] = true;
      walk(p, on, only);
      on[e.dst] = false;
      p.cost = saved;
      p.nodes.pop_back();
      p.mods.pop_back();
    }
  };

  auto start = [&](const std::string* only) {
    Path p{{src}, {}, one(ks)};
    std::vector<bool> on(n.node_count(), false);
    on[src] = true;
    walk(p, on, only);
  };
  if (uniform && !allowed.empty()) {
    std::set<std::string> mods(allowed.begin(), allowed.end());
    for (const auto& m : mods) start(&m);
  } else {
    start(nullptr);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    return std::tie(a.nodes, a.mods) < std::tie(b.nodes, b.mods);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Path& a, const Path& b) { return a.nodes == b.nodes && a.mods == b.mods; }),
            out.end());
  return out;
}

std::vector<Tree> all_trees(const Network& n, NodeIndex source, std::vector<NodeIndex> receivers, std::size_t depth,
                            const std::vector<std::string>& allowed) {
  std::vector<DimKind> ks(n.spec().kinds().begin(), n.spec().kinds().end());
  std::sort(receivers.begin(), receivers.end());
  receivers.erase(std::unique(receivers.begin(), receivers.end()), receivers.end());
  const std::size_t N = n.node_count();
  std::vector<bool> is_recv(N, false);
  for (auto r : receivers) is_recv[r] = true;
  if (is_recv[source]) throw std::invalid_argument("oracle: source among receivers");

  // Usable link u->v (no parallel edges expected).
  std::map<std::pair<NodeIndex, NodeIndex>, const Edge*> link;
  for (const Edge& e : n.edges()) {
    bool ok = std::all_of(e.modalities.begin(), e.modalities.end(), [&](const std::string& m) {
      return allowed.empty() || std::find(allowed.begin(), allowed.end(), m) != allowed.end();
    });
    if (ok) link[{e.src, e.dst}] = &e;
  }

  std::vector<NodeIndex> optional_nodes;
  for (NodeIndex v = 0; v < N; ++v)
    if (v != source && !is_recv[v]) optional_nodes.push_back(v);

  std::vector<Tree> out;
  for (std::uint32_t mask = 0; mask < (1u << optional_nodes.size()); ++mask) {
    std::vector<NodeIndex> members = receivers;
    for (std::size_t i = 0; i < optional_nodes.size(); ++i)
      if (mask & (1u << i)) members.push_back(optional_nodes[i]);
    std::vector<bool> in_tree(N, false);
    in_tree[source] = true;
    for (auto v : members) in_tree[v] = true;

    // Candidate parents per member.
    std::vector<std::vector<NodeIndex>> cands(members.size());
    bool feasible = true;
    for (std::size_t i = 0; i < members.size() && feasible; ++i) {
      for (NodeIndex u = 0; u < N; ++u)
        if (in_tree[u] && !is_recv[u] && u != members[i] && link.contains({u, members[i]})) cands[i].push_back(u);
      feasible = !cands[i].empty();
    }
    if (!feasible) continue;

    std::vector<NodeIndex> parent(N, source);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i < members.size()) {
        for (auto u : cands[i]) {
          parent[members[i]] = u;
          assign(i + 1);
        }
        return;
      }
      // Validate: every member reaches the source, internal nodes have a child.
      std::vector<std::vector<NodeIndex>> kids(N);
      for (auto v : members) kids[parent[v]].push_back(v);
      std::vector<std::size_t> level(N, 0);
      std::size_t tree_depth = 0;
      for (auto v : members) {
        std::size_t steps = 0;
        NodeIndex x = v;
        while (x != source && steps <= members.size()) {
          x = parent[x];
          ++steps;
        }
        if (x != source) return;
        level[v] = steps;
        tree_depth = std::max(tree_depth, steps);
      }
      if (tree_depth > depth) return;
      if (kids[source].empty()) return;
      for (auto v : members)
        if (!is_recv[v] && kids[v].empty()) return;

      MultiCost cost = one(ks);
      for (NodeIndex u = 0; u < N; ++u) {
        if (kids[u].empty()) continue;
        MultiCost conn = link.at({u, kids[u].front()})->cost;
        for (std::size_t j = 1; j < kids[u].size(); ++j) {
          const MultiCost& c = link.at({u, kids[u][j]})->cost;
          for (std::size_t d = 0; d < ks.size(); ++d) {
            if (ks[d] == DimKind::Weighted && n.compose_mode() == qosr::ComposeMode::Sum) conn[d] = conn[d] + c[d];
            else if (ks[d] == DimKind::Weighted) conn[d] = std::max(conn[d], c[d]);
            else conn[d] = std::min(conn[d], c[d]);
          }
        }
        cost = times(ks, cost, conn);
      }
      for (auto r : receivers) cost = times(ks, cost, n.receiver_cost(r).value_or(one(ks)));

      std::function<std::string(NodeIndex)> enc = [&](NodeIndex v) {
        std::string s = "(" + n.name(v);
        std::vector<NodeIndex> ch = kids[v];
        std::sort(ch.begin(), ch.end());
        for (auto c : ch) s += " " + enc(c);
        return s + ")";
      };
      out.push_back(Tree{enc(source), cost, tree_depth});
    };
    assign(0);
  }
  std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) { return a.encoding < b.encoding; });
  return out;
}

Shape shape(const Network& n) {
  const std::size_t N = n.node_count();
  std::vector<std::set<NodeIndex>> adj(N);
  for (const Edge& e : n.edges()) {
    if (e.src == e.dst) continue;
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }
  Shape s;
  s.nodes = N;
  std::size_t deg_sum = 0;
  s.min_degree = N ? SIZE_MAX : 0;
  double cl = 0;
  for (NodeIndex v = 0; v < N; ++v) {
    std::size_t d = adj[v].size();
    deg_sum += d;
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    if (d < 2) continue;
    std::size_t links = 0;
    for (auto a : adj[v])
      for (auto b : adj[v])
        if (a < b && adj[a].contains(b)) ++links;
    cl += 2.0 * static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  s.edges = deg_sum / 2;
  if (N) {
    s.avg_degree = static_cast<double>(deg_sum) / static_cast<double>(N);
    s.clustering = cl / static_cast<double>(N);
  }

  // Components.
  std::vector<int> comp(N, -1);
  std::vector<std::size_t> sizes;
  for (NodeIndex v = 0; v < N; ++v) {
    if (comp[v] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    std::size_t count = 0;
    std::deque<NodeIndex> q{v};
    comp[v] = id;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      ++count;
      for (auto w : adj[u])
        if (comp[w] < 0) {
          comp[w] = id;
          q.push_back(w);
        }
    }
    sizes.push_back(count);
  }
  if (sizes.empty()) return s;
  int big = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  s.component = sizes[big];
  double total = 0;
  std::size_t pairs = 0;
  for (NodeIndex v = 0; v < N; ++v) {
    if (comp[v] != big) continue;
    std::vector<std::size_t> dist(N, SIZE_MAX);
    dist[v] = 0;
    std::deque<NodeIndex> q{v};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto w : adj[u])
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    for (NodeIndex w = 0; w < N; ++w) {
      if (w == v || dist[w] == SIZE_MAX) continue;
      total += static_cast<double>(dist[w]);
      ++pairs;
      s.diameter = std::max(s.diameter, dist[w]);
    }
  }
  if (pairs) s.avg_shortest_path = total / static_cast<double>(pairs);
  return s;
}

namespace {

Rational random_value(qosr::Rng& rng, DimKind k, std::int64_t max_value) {
  switch (k) {
    case DimKind::Weighted:
    case DimKind::Bandwidth:
      return Rational{qosr::uniform_in(rng, 1, max_value)};
    case DimKind::Probabilistic:
      return Rational{qosr::uniform_in(rng, 1, 10), 10};
    case DimKind::Boolean:
      return Rational{qosr::uniform_in(rng, 0, 1)};
  }
  throw std::logic_error("kind");
}

MultiCost random_cost(qosr::Rng& rng, const RandomNet& spec) {
  MultiCost c(spec.kinds.size(), Rational{0});
  for (std::size_t i = 0; i < spec.kinds.size(); ++i) c[i] = random_value(rng, spec.kinds[i], spec.max_value);
  return c;
}

}  // namespace

Network random_network(qosr::Rng& rng, const RandomNet& spec) {
  if (spec.nodes > 26) throw std::invalid_argument("oracle: at most 26 nodes");
  qosr::NetworkBuilder b{qosr::SemiringSpec(spec.kinds)};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < spec.nodes; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
    b.add_node(names.back());
  }
  const std::uint64_t scale = 1000;
  auto threshold = static_cast<std::uint64_t>(spec.edge_prob * scale);
  for (std::size_t u = 0; u < spec.nodes; ++u) {
    for (std::size_t v = 0; v < spec.nodes; ++v) {
      if (u == v || qosr::uniform_below(rng, scale) >= threshold) continue;
      if (spec.mods.empty()) {
        b.add_edge(names[u], names[v], random_cost(rng, spec));
        continue;
      }
      std::vector<std::string> first, second;
      for (const auto& m : spec.mods) (qosr::uniform_below(rng, 2) ? first : second).push_back(m);
      if (first.empty()) std::swap(first, second);
      b.add_edge(names[u], names[v], random_cost(rng, spec), first);
      if (spec.parallel && !second.empty() && qosr::uniform_below(rng, 2))
        b.add_edge(names[u], names[v], random_cost(rng, spec), second);
    }
  }
  for (const auto& r : spec.receivers) b.add_receiver(r, random_cost(rng, spec));
  return b.build();
}

}  // namespace oracle
