#include "qosr/graph/hypergraph.hpp"

#include <algorithm>

namespace qosr {
namespace {

bool subset_of(const std::vector<std::string>& xs, const std::vector<std::string>& allowed) {
  return std::includes(allowed.begin(), allowed.end(), xs.begin(), xs.end());
}

bool meets(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::vector<std::string> sorted_unique(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

Hypergraph::Hypergraph(const Network& n) : net_(&n) {
  if (n.has_parallel_edges()) {
    throw UnsupportedConfiguration("and-or graph needs at most one edge per node pair");
  }
}

Connector Hypergraph::make_connector(NodeIndex input, const std::vector<EdgeIndex>& members) const {
  Connector c;
  c.input = input;
  c.members = members;
  std::vector<MultiCost> costs;
  for (EdgeIndex e : members) {
    const Edge& edge = net_->edge(e);
    c.outputs.push_back(edge.dst);
    costs.push_back(edge.cost);
    c.modalities.insert(c.modalities.end(), edge.modalities.begin(), edge.modalities.end());
    c.reach.insert(c.reach.end(), edge.reach.begin(), edge.reach.end());
  }
  c.modalities = sorted_unique(std::move(c.modalities));
  c.reach = sorted_unique(std::move(c.reach));
  c.cost = compose_parallel(net_->spec(), costs, net_->compose_mode());
  return c;
}

ConnectorStream Hypergraph::connectors_from(NodeIndex node, const ConnectorFilter& filter) const {
  std::vector<std::string> allowed_mods = sorted_unique(filter.allowed_modalities);
  std::vector<std::string> reach = sorted_unique(filter.reach);
  std::vector<EdgeIndex> cand;
  for (EdgeIndex e : net_->out_edges(node)) {
    const Edge& edge = net_->edge(e);
    if (!filter.allowed_outputs.empty() && !filter.allowed_outputs[edge.dst]) continue;
    if (!allowed_mods.empty() && !subset_of(edge.modalities, allowed_mods)) continue;
    if (!reach.empty() && !edge.reach.empty() && !meets(edge.reach, reach)) continue;
    cand.push_back(e);
  }
  bool zero = filter.include_zero && net_->is_receiver(node);
  return ConnectorStream(*this, node, std::move(cand), filter.max_width, zero);
}

std::optional<Connector> Hypergraph::connector(NodeIndex input, std::vector<NodeIndex> outputs) const {
  std::sort(outputs.begin(), outputs.end());
  if (outputs.empty() || std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end()) return std::nullopt;
  std::vector<EdgeIndex> members;
  auto out = net_->out_edges(input);
  for (NodeIndex o : outputs) {
    auto it = std::find_if(out.begin(), out.end(), [&](EdgeIndex e) { return net_->edge(e).dst == o; });
    if (it == out.end()) return std::nullopt;
    members.push_back(*it);
  }
  return make_connector(input, members);
}

ConnectorStream::ConnectorStream(const Hypergraph& h, NodeIndex node, std::vector<EdgeIndex> candidates,
                                 std::size_t max_width, bool zero_pending)
    : h_(&h),
      node_(node),
      cand_(std::move(candidates)),
      max_width_(std::min(max_width, cand_.size())),
      zero_pending_(zero_pending) {
  done_ = max_width_ == 0;
}

std::optional<Connector> ConnectorStream::next() {
  if (zero_pending_) {
    zero_pending_ = false;
    return zero_connector(h_->network(), node_);
  }
  if (done_) return std::nullopt;
  std::size_t n = cand_.size();
  if (pick_.empty()) {
    pick_ = {0};
  } else {
    // Advance to the next k-combination; move to k+1 when exhausted.
    std::size_t k = pick_.size();
    std::size_t i = k;
    while (i > 0 && pick_[i - 1] == n - k + i - 1) --i;
    if (i == 0) {
      if (k + 1 > max_width_) {
        done_ = true;
        return std::nullopt;
      }
      pick_.resize(k + 1);
      for (std::size_t j = 0; j <= k; ++j) pick_[j] = j;
    } else {
      ++pick_[i - 1];
      for (std::size_t j = i; j < k; ++j) pick_[j] = pick_[j - 1] + 1;
    }
  }
  std::vector<EdgeIndex> members;
  members.reserve(pick_.size());
  for (std::size_t p : pick_) members.push_back(cand_[p]);
  return h_->make_connector(node_, members);
}

Connector zero_connector(const Network& n, NodeIndex node) {
  auto cost = n.receiver_cost(node);
  if (!cost) throw NetworkError("'" + n.name(node) + "' is not a receiver");
  Connector c;
  c.input = node;
  c.cost = *cost;
  return c;
}

}  // namespace qosr
