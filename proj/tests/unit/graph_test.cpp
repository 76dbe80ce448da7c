#include <gtest/gtest.h>

#include "qosr/algebra/random.hpp"
#include "qosr/graph/format.hpp"
#include "qosr/graph/hypergraph.hpp"
#include "support/oracles.hpp"

using namespace qosr;

namespace {

const char* kSmall = R"(qnet 1
# two metrics
dims cost:weighted,bw:bandwidth
node a
node b
node c
edge a b 1,5
edge b c 2,7 mods=w|l reach=AS1
edge a c 9,9
receiver c
region c AS1
)";

std::size_t error_line(const std::string& text) {
  try {
    (void)parse_network(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return SIZE_MAX;
}

}  // namespace

TEST(Format, ParsesRecords) {
  Network n = parse_network(kSmall);
  EXPECT_EQ(n.node_count(), 3u);
  EXPECT_EQ(n.edges().size(), 3u);
  EXPECT_EQ(n.dim_index("bw"), 1u);
  EXPECT_FALSE(n.dim_index("delay"));
  const Edge& bc = n.edge(n.out_edges(n.index("b")).front());
  EXPECT_EQ(bc.cost, (MultiCost{2, 7}));
  EXPECT_EQ(bc.modalities, (std::vector<std::string>{"l", "w"}));
  EXPECT_EQ(bc.reach, (std::vector<std::string>{"AS1"}));
  EXPECT_EQ(n.receiver_cost(n.index("c")), n.spec().one());
  EXPECT_EQ(n.region(n.index("c")), "AS1");
  EXPECT_FALSE(n.region(n.index("a")));
}

TEST(Format, OutEdgesAreSortedByDestination) {
  Network n = parse_network(kSmall);
  auto out = n.out_edges(n.index("a"));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(n.edge(out[0]).dst, n.index("b"));
  EXPECT_EQ(n.edge(out[1]).dst, n.index("c"));
}

TEST(Format, ErrorsCarryLineNumbers) {
  std::string base = "qnet 1\ndims weighted\nnode a\nnode b\n";
  EXPECT_EQ(error_line(base + "edge a b 1,2\n"), 5u);
  EXPECT_EQ(error_line(base + "edge a z 1\n"), 5u);
  EXPECT_EQ(error_line(base + "edge a a 1\n"), 5u);
  EXPECT_EQ(error_line(base + "node a\n"), 5u);
  EXPECT_EQ(error_line(base + "bogus a\n"), 5u);
  EXPECT_EQ(error_line(base + "edge a b -1\n"), 5u);
  EXPECT_EQ(error_line(base + "edge a b 1 color=red\n"), 5u);
  EXPECT_EQ(error_line("qnet 2\n"), 1u);
  EXPECT_EQ(error_line("qnet 1\ndims weighted,heavy\n"), 2u);
  EXPECT_EQ(error_line("qnet 1\nnode a\n"), 2u);
  EXPECT_EQ(error_line(""), 0u);
}

TEST(Format, LoadReportsFileAndLine) {
  try {
    (void)load_network("/nonexistent/file.qnet");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/file.qnet"), std::string::npos);
  }
}

TEST(Format, ParallelEdgesNeedDisjointModalities) {
  std::string base = "qnet 1\ndims weighted\nnode a\nnode b\n";
  EXPECT_NO_THROW(parse_network(base + "edge a b 1 mods=x\nedge a b 2 mods=y\n"));
  EXPECT_EQ(error_line(base + "edge a b 1 mods=x\nedge a b 2 mods=x|y\n"), 6u);
  EXPECT_EQ(error_line(base + "edge a b 1\nedge a b 2\n"), 6u);
  Network n = parse_network(base + "edge a b 1 mods=x\nedge a b 2 mods=y\n");
  EXPECT_TRUE(n.has_parallel_edges());
  EXPECT_THROW(Hypergraph{n}, UnsupportedConfiguration);
}

TEST(Format, UndirectedAddsTwins) {
  Network n = parse_network("qnet 1\ndims weighted\nundirected true\nnode a\nnode b\nedge b a 4\n");
  ASSERT_EQ(n.edges().size(), 2u);
  EXPECT_EQ(n.out_edges(n.index("a")).size(), 1u);
  EXPECT_EQ(n.out_edges(n.index("b")).size(), 1u);
  std::string text = serialize_network(n);
  EXPECT_NE(text.find("edge a b 4"), std::string::npos);
  EXPECT_EQ(text.find("edge b a"), std::string::npos);
  EXPECT_EQ(parse_network(text), n);
}

TEST(Format, SerializeRoundTrips) {
  Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    oracle::RandomNet spec;
    spec.nodes = 2 + uniform_below(rng, 8);
    spec.kinds = {DimKind::Weighted, DimKind::Probabilistic, DimKind::Boolean};
    spec.kinds.resize(1 + uniform_below(rng, 3));
    spec.mods = {"l", "w"};
    spec.parallel = true;
    spec.receivers = {"a"};
    Network n = oracle::random_network(rng, spec);
    std::string text = serialize_network(n);
    Network back = parse_network(text);
    EXPECT_EQ(back, n);
    EXPECT_EQ(serialize_network(back), text);
  }
}

TEST(Graph, HopDiameterAndDefaultDepth) {
  Network n = parse_network("qnet 1\ndims weighted\nnode a\nnode b\nnode c\nnode d\nedge a b 1\nedge b c 1\nedge c d 1\n");
  EXPECT_EQ(hop_diameter(n), 3u);
  EXPECT_EQ(default_depth(n), 6u);
  Network lone = parse_network("qnet 1\ndims weighted\nnode a\n");
  EXPECT_EQ(default_depth(lone), 1u);
}

TEST(Hypergraph, ConnectorsComeInSizeThenLexicographicOrder) {
  Network n = parse_network(
      "qnet 1\ndims bw:bandwidth,cost:weighted\nnode a\nnode b\nnode c\nnode d\n"
      "edge a b 7,2\nedge a c 10,3\nedge a d 5,1\nreceiver a 4,4\n");
  Hypergraph h(n);
  auto stream = h.connectors_from(n.index("a"));
  std::vector<std::vector<NodeIndex>> seen;
  std::vector<MultiCost> costs;
  while (auto c = stream.next()) {
    seen.push_back(c->outputs);
    costs.push_back(c->cost);
  }
  NodeIndex a = 0, b = 1, c = 2, d = 3;
  std::vector<std::vector<NodeIndex>> want{{}, {b}, {c}, {d}, {b, c}, {b, d}, {c, d}, {b, c, d}};
  EXPECT_EQ(seen, want);
  (void)a;
  EXPECT_EQ(costs[0], (MultiCost{4, 4}));
  EXPECT_EQ(costs[4], (MultiCost{7, 3}));
  EXPECT_EQ(costs[7], (MultiCost{5, 3}));
}

TEST(Hypergraph, FilterRestrictsMembers) {
  Network n = parse_network(
      "qnet 1\ndims weighted\nnode a\nnode b\nnode c\nnode d\n"
      "edge a b 1 mods=w\nedge a c 1 mods=l\nedge a d 1 reach=X\n");
  Hypergraph h(n);
  ConnectorFilter f;
  f.allowed_modalities = {"w"};
  f.reach = {"Y"};
  auto stream = h.connectors_from(n.index("a"), f);
  std::vector<std::vector<NodeIndex>> seen;
  while (auto c = stream.next()) seen.push_back(c->outputs);
  EXPECT_EQ(seen, (std::vector<std::vector<NodeIndex>>{{1}}));
  f.max_width = 0;
  EXPECT_FALSE(h.connectors_from(n.index("a"), f).next());
}

TEST(Hypergraph, ExplicitConnector) {
  Network n = parse_network("qnet 1\ndims weighted\nnode a\nnode b\nnode c\nedge a b 2\nedge a c 5\n");
  Hypergraph h(n);
  auto c = h.connector(0, {2, 1});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->outputs, (std::vector<NodeIndex>{1, 2}));
  EXPECT_EQ(c->cost, MultiCost{5});
  EXPECT_FALSE(h.connector(1, {2}));
  EXPECT_THROW(zero_connector(n, 0), NetworkError);
}
