#include <gtest/gtest.h>

#include <cmath>

#include "qosr/graph/format.hpp"
#include "qosr/netgen/netgen.hpp"
#include "support/oracles.hpp"

using namespace qosr;

namespace {

GenParams gen(std::size_t nodes, std::size_t edges, std::uint64_t seed = 1) {
  GenParams p;
  p.nodes = nodes;
  p.edges = edges;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(Netgen, SameSeedSameNetwork) {
  GenParams p = gen(60, 120, 3);
  EXPECT_EQ(serialize_network(generate(p)), serialize_network(generate(p)));
  GenParams q = p;
  q.seed = 4;
  EXPECT_NE(serialize_network(generate(p)), serialize_network(generate(q)));
}

TEST(Netgen, HitsTheEdgeCountAndRanges) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams p = gen(40, 90, seed);
    p.ranges = {{2, 4}, {5, 5}};
    Network n = generate(p);
    EXPECT_EQ(n.node_count(), 40u);
    EXPECT_TRUE(n.undirected());
    EXPECT_EQ(n.edges().size(), 180u);
    for (const Edge& e : n.edges()) {
      EXPECT_GE(e.cost[0], Rational{2});
      EXPECT_LE(e.cost[0], Rational{4});
      EXPECT_EQ(e.cost[1], Rational{5});
    }
    EXPECT_NE(n.origin().find("seed=" + std::to_string(seed)), std::string::npos);
  }
}

TEST(Netgen, ProbabilisticValuesArePercentages) {
  GenParams p = gen(10, 15, 2);
  p.dims = {DimKind::Probabilistic};
  p.ranges = {{50, 100}};
  Network n = generate(p);
  for (const Edge& e : n.edges()) {
    EXPECT_GE(e.cost[0], Rational(1, 2));
    EXPECT_LE(e.cost[0], Rational{1});
  }
}

TEST(Netgen, RejectsInfeasibleParameters) {
  EXPECT_THROW(generate(gen(4, 7)), std::invalid_argument);
  EXPECT_THROW(generate(gen(0, 0)), std::invalid_argument);
  GenParams bad = gen(5, 4);
  bad.ranges = {{5, 1}, {1, 1}};
  EXPECT_THROW(generate(bad), std::invalid_argument);
}

TEST(Netgen, StatsMatchReference) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Network n = generate(gen(80, 150, seed));
    GraphStats s = stats(n);
    oracle::Shape o = oracle::shape(n);
    EXPECT_EQ(s.nodes, o.nodes);
    EXPECT_EQ(s.edges, o.edges);
    EXPECT_EQ(s.min_degree, o.min_degree);
    EXPECT_EQ(s.max_degree, o.max_degree);
    EXPECT_NEAR(s.avg_degree, o.avg_degree, 1e-9);
    EXPECT_NEAR(s.clustering, o.clustering, 1e-9);
    EXPECT_NEAR(s.avg_shortest_path, o.avg_shortest_path, 1e-9);
    EXPECT_EQ(s.diameter, o.diameter);
    EXPECT_EQ(s.component_size, o.component);
    EXPECT_EQ(s.connected, o.component == o.nodes);
  }
}

TEST(Netgen, DegreesAreSkewed) {
  Network n = generate(gen(265, 600, 1));
  GraphStats s = stats(n);
  EXPECT_NEAR(s.avg_degree, 1200.0 / 265.0, 1e-9);
  EXPECT_GE(static_cast<double>(s.max_degree), 3 * s.avg_degree);
}

TEST(Netgen, StatsOnATriangleWithATail) {
  Network n = parse_network(
      "qnet 1\ndims weighted\nundirected true\nnode a\nnode b\nnode c\nnode d\nnode e\n"
      "edge a b 1\nedge b c 1\nedge a c 1\nedge c d 1\n");
  GraphStats s = stats(n);
  EXPECT_FALSE(s.connected);
  EXPECT_EQ(s.component_size, 4u);
  EXPECT_EQ(s.diameter, 2u);
  // Local clustering: a 1, b 1, c 1/3, d 0, e 0.
  EXPECT_NEAR(s.clustering, (1 + 1 + 1.0 / 3) / 5, 1e-12);
  EXPECT_EQ(s.min_degree, 0u);
  EXPECT_EQ(s.max_degree, 3u);
}
