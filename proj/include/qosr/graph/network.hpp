#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qosr/algebra/semiring.hpp"

namespace qosr {

// Nodes are numbered in lexicographic order of their names, so comparing
// indices compares names.
using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// How several links bundled into one connector merge their weighted values.
enum class ComposeMode : std::uint8_t { Max, Sum };

// Structural problem in a network description.
class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  NodeIndex src = 0;
  NodeIndex dst = 0;
  MultiCost cost;
  std::vector<std::string> modalities;  // sorted, unique
  std::vector<std::string> reach;       // sorted, unique; empty = anywhere
};

class Network {
 public:
  [[nodiscard]] const SemiringSpec& spec() const { return spec_; }
  // Optional per-dimension names from the header ("" when unnamed).
  [[nodiscard]] const std::vector<std::string>& dim_names() const { return dim_names_; }
  [[nodiscard]] std::optional<std::size_t> dim_index(std::string_view name) const;
  [[nodiscard]] ComposeMode compose_mode() const { return compose_; }
  [[nodiscard]] bool undirected() const { return undirected_; }
  [[nodiscard]] const std::string& origin() const { return origin_; }

  [[nodiscard]] std::size_t node_count() const { return names_.size(); }
  [[nodiscard]] const std::string& name(NodeIndex n) const { return names_.at(n); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<NodeIndex> find(std::string_view name) const;
  // Throws NetworkError naming the node when absent.
  [[nodiscard]] NodeIndex index(std::string_view name) const;

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  // Out-edges of n ordered by destination, then by modality list.
  [[nodiscard]] std::span<const EdgeIndex> out_edges(NodeIndex n) const { return out_.at(n); }
  [[nodiscard]] std::span<const EdgeIndex> in_edges(NodeIndex n) const { return in_.at(n); }
  // True when some (src,dst) pair carries more than one edge.
  [[nodiscard]] bool has_parallel_edges() const { return parallel_; }

  [[nodiscard]] const std::map<NodeIndex, MultiCost>& receivers() const { return receivers_; }
  [[nodiscard]] bool is_receiver(NodeIndex n) const { return receivers_.contains(n); }
  [[nodiscard]] std::optional<MultiCost> receiver_cost(NodeIndex n) const;

  [[nodiscard]] const std::optional<std::string>& region(NodeIndex n) const { return regions_.at(n); }

  friend bool operator==(const Network& a, const Network& b);

 private:
  friend class NetworkBuilder;
  explicit Network(SemiringSpec spec) : spec_(std::move(spec)) {}

  SemiringSpec spec_;
  std::vector<std::string> dim_names_;
  ComposeMode compose_ = ComposeMode::Max;
  bool undirected_ = false;
  std::string origin_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  bool parallel_ = false;
  std::map<NodeIndex, MultiCost> receivers_;
  std::vector<std::optional<std::string>> regions_;
};

// Collects nodes and records by name and produces a validated Network.
// All add_* calls throw NetworkError on invalid input.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(SemiringSpec spec, std::vector<std::string> dim_names = {});

  void set_compose(ComposeMode m) { compose_ = m; }
  // Each later edge also gets its reverse twin.
  void set_undirected(bool u);
  void set_origin(std::string origin) { origin_ = std::move(origin); }

  void add_node(std::string_view name);
  void add_edge(std::string_view src, std::string_view dst, const MultiCost& cost,
                std::vector<std::string> modalities = {}, std::vector<std::string> reach = {});
  // Cost defaults to the semiring's one.
  void add_receiver(std::string_view name, std::optional<MultiCost> cost = std::nullopt);
  void set_region(std::string_view name, std::string_view label);

  [[nodiscard]] Network build() const;

 private:
  struct PendingEdge {
    std::string src, dst;
    MultiCost cost;
    std::vector<std::string> modalities, reach;
  };

  void require_node(std::string_view name) const;
  void insert_edge(PendingEdge e);

  SemiringSpec spec_;
  std::vector<std::string> dim_names_;
  ComposeMode compose_ = ComposeMode::Max;
  bool undirected_ = false;
  std::string origin_;
  std::map<std::string, bool, std::less<>> nodes_;
  std::vector<PendingEdge> edges_;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_pair_;
  std::map<std::string, std::optional<MultiCost>, std::less<>> receivers_;
  std::map<std::string, std::string, std::less<>> regions_;
};

// True for tokens matching [A-Za-z_][A-Za-z0-9_]*.
bool valid_identifier(std::string_view token);

// Parallel composition of link costs bundled in one connector: bandwidth,
// probabilistic and boolean take the minimum, weighted takes the maximum
// (or the sum under ComposeMode::Sum).
MultiCost compose_parallel(const SemiringSpec& s, std::span<const MultiCost> costs,
                           ComposeMode mode = ComposeMode::Max);

// Longest finite shortest-path hop distance over directed edges.
std::size_t hop_diameter(const Network& n);

// Default search depth: twice the hop diameter, at least 1.
std::size_t default_depth(const Network& n);

}  // namespace qosr
