#include "qosr/netgen/netgen.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "qosr/algebra/random.hpp"

namespace qosr {

Network generate(const GenParams& p) {
  if (p.nodes == 0) throw std::invalid_argument("need at least one node");
  if (p.dims.empty()) throw std::invalid_argument("need at least one dimension");
  if (p.ranges.size() != p.dims.size()) throw std::invalid_argument("one cost range per dimension is required");
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    auto [lo, hi] = p.ranges[i];
    if (lo > hi) throw std::invalid_argument("empty cost range");
    bool ok = p.dims[i] == DimKind::Probabilistic ? lo >= 0 && hi <= 100
              : p.dims[i] == DimKind::Boolean     ? lo >= 0 && hi <= 1
                                                  : lo >= 0;
    if (!ok) throw std::invalid_argument("cost range outside the dimension's carrier");
  }
  std::uint64_t n = p.nodes;
  std::uint64_t max_edges = n * (n - 1) / 2;
  if (p.edges > max_edges) {
    throw std::invalid_argument(std::to_string(p.edges) + " edges do not fit in " + std::to_string(n) + " nodes");
  }

  Rng rng(p.seed);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::set<std::uint64_t>> adj(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> links;
  for (std::uint64_t i = 1; i < n; ++i) {
    std::uint64_t target = (p.edges * i * 2 + (n - 1)) / (2 * (n - 1));  // round(E*i/(N-1))
    std::uint64_t quota = std::min<std::uint64_t>(i, target > links.size() ? target - links.size() : 0);
    std::uint64_t added = 0;
    while (added < quota) {
      std::vector<std::uint64_t> pool;
      for (std::uint64_t v = 0; v < i; ++v) {
        if (!adj[i].contains(v)) pool.push_back(v);
      }
      for (std::size_t k = pool.size(); k > 1; --k) std::swap(pool[k - 1], pool[uniform_below(rng, k)]);
      for (std::uint64_t v : pool) {
        if (added == quota) break;
        std::uint64_t total = links.size() + (i + 1);
        if (uniform_below(rng, total) < degree[v] + 1) {
          adj[i].insert(v);
          adj[v].insert(i);
          ++degree[i];
          ++degree[v];
          links.push_back({v, i});
          ++added;
        }
      }
    }
  }
  if (links.size() != p.edges) {
    throw std::invalid_argument("could not place " + std::to_string(p.edges) + " edges");
  }

  std::vector<std::string> names = p.dim_names;
  if (names.empty()) names.assign(p.dims.size(), "");
  NetworkBuilder b(SemiringSpec(p.dims), names);
  b.set_undirected(true);
  b.set_origin("generator=pa rng=" + std::string(kRngAlgorithm) + " seed=" + std::to_string(p.seed) +
               " nodes=" + std::to_string(p.nodes) + " edges=" + std::to_string(p.edges));
  for (std::uint64_t v = 0; v < n; ++v) b.add_node("n" + std::to_string(v));
  for (auto [u, v] : links) {
    MultiCost c(p.dims.size());
    for (std::size_t d = 0; d < p.dims.size(); ++d) {
      std::int64_t x = uniform_in(rng, p.ranges[d].first, p.ranges[d].second);
      c[d] = p.dims[d] == DimKind::Probabilistic ? Rational{x, 100} : Rational{x};
    }
    b.add_edge("n" + std::to_string(u), "n" + std::to_string(v), c);
  }
  return b.build();
}

GraphStats stats(const Network& net) {
  GraphStats st;
  std::size_t n = net.node_count();
  st.nodes = n;
  std::vector<std::vector<NodeIndex>> adj(n);
  {
    std::vector<std::set<NodeIndex>> nb(n);
    for (const Edge& e : net.edges()) {
      nb[e.src].insert(e.dst);
      nb[e.dst].insert(e.src);
    }
    for (std::size_t v = 0; v < n; ++v) adj[v].assign(nb[v].begin(), nb[v].end());
  }
  std::size_t degree_sum = 0;
  st.min_degree = n ? SIZE_MAX : 0;
  double clustering_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t d = adj[v].size();
    degree_sum += d;
    st.min_degree = std::min(st.min_degree, d);
    st.max_degree = std::max(st.max_degree, d);
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        if (std::binary_search(adj[adj[v][a]].begin(), adj[adj[v][a]].end(), adj[v][b])) ++links;
      }
    }
    clustering_sum += 2.0 * static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  st.edges = degree_sum / 2;
  if (n == 0) return st;
  st.avg_degree = static_cast<double>(degree_sum) / static_cast<double>(n);
  st.clustering = clustering_sum / static_cast<double>(n);

  // Components, then BFS from every node of the largest.
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::size_t id = sizes.size();
    sizes.push_back(0);
    std::deque<std::size_t> q{s};
    comp[s] = id;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      ++sizes[id];
      for (NodeIndex v : adj[u]) {
        if (comp[v] == SIZE_MAX) {
          comp[v] = id;
          q.push_back(v);
        }
      }
    }
  }
  std::size_t big = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  st.connected = sizes.size() == 1;
  st.component_size = sizes[big];
  std::uint64_t dist_sum = 0;
  std::uint64_t pairs = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != big) continue;
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      if (u != s) {
        dist_sum += dist[u];
        ++pairs;
        st.diameter = std::max(st.diameter, dist[u]);
      }
      for (NodeIndex v : adj[u]) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  st.avg_shortest_path = pairs ? static_cast<double>(dist_sum) / static_cast<double>(pairs) : 0.0;
  return st;
}

}  // namespace qosr
