#include <gtest/gtest.h>

#include <algorithm>

#include "qosr/algebra/frontier.hpp"
#include "qosr/algebra/random.hpp"
#include "support/oracles.hpp"

using namespace qosr;

namespace {

std::vector<MultiCost> random_costs(Rng& rng, std::size_t dims, std::size_t count, std::int64_t hi) {
  std::vector<MultiCost> out;
  for (std::size_t i = 0; i < count; ++i) {
    MultiCost c(dims);
    for (std::size_t d = 0; d < dims; ++d) c[d] = Rational{uniform_in(rng, 0, hi)};
    out.push_back(c);
  }
  return out;
}

Frontier<int> build(const SemiringSpec& s, const std::vector<MultiCost>& cs) {
  Frontier<int> f;
  for (std::size_t i = 0; i < cs.size(); ++i) frontier_insert(s, f, cs[i], static_cast<int>(i));
  return f;
}

}  // namespace

TEST(Frontier, InsertKeepsExactlyTheNonDominatedSet) {
  Rng rng(21);
  for (int round = 0; round < 200; ++round) {
    std::size_t dims = 1 + uniform_below(rng, 3);
    std::vector<DimKind> ks(dims, DimKind::Weighted);
    if (dims > 1 && uniform_below(rng, 2)) ks[0] = DimKind::Bandwidth;
    SemiringSpec s(ks);
    auto cs = random_costs(rng, dims, 1 + uniform_below(rng, 30), 9);
    auto f = build(s, cs);
    EXPECT_EQ(f.costs(), oracle::pareto_filter(ks, cs));
    // Witnesses: the smallest indices of each surviving cost.
    for (const auto& e : f.entries) {
      std::vector<int> ids;
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] == e.cost) ids.push_back(static_cast<int>(i));
      ids.resize(std::min<std::size_t>(ids.size(), f.witness_cap));
      EXPECT_EQ(e.witnesses, ids);
    }
  }
}

TEST(Frontier, CollapseIsTheChooseFold) {
  SemiringSpec s({DimKind::Weighted, DimKind::Weighted});
  auto f = build(s, {MultiCost{7, 8}, MultiCost{9, 7}, MultiCost{13, 9}, MultiCost{15, 8}});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(collapse(s, f), (MultiCost{7, 7}));
  EXPECT_EQ(collapse(s, Frontier<int>{}), s.zero());
}

TEST(Frontier, ZeroIsNeverStored) {
  SemiringSpec s({DimKind::Weighted});
  Frontier<int> f;
  EXPECT_FALSE(frontier_insert(s, f, s.zero(), 0));
  EXPECT_TRUE(f.empty());
}

TEST(Frontier, CombineMatchesPairwiseProducts) {
  Rng rng(4);
  std::vector<DimKind> ks{DimKind::Weighted, DimKind::Weighted};
  SemiringSpec s(ks);
  for (int round = 0; round < 50; ++round) {
    auto xs = random_costs(rng, 2, 6, 9), ys = random_costs(rng, 2, 6, 9);
    auto fx = build(s, xs), fy = build(s, ys);
    auto fz = frontier_combine(s, fx, fy, [](int a, int b) { return a * 100 + b; });
    std::vector<MultiCost> all;
    for (const auto& a : fx.costs())
      for (const auto& b : fy.costs()) all.push_back(oracle::times(ks, a, b));
    EXPECT_EQ(fz.costs(), oracle::pareto_filter(ks, all));
  }
}

TEST(Cut, GridIncludesBothEnds) {
  WeightProfile w{{2, 1}, {1, 0}};
  auto g = weight_grid(w, 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.front(), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(g.back(), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(weight_grid(w, 1).size(), 2u);
  EXPECT_EQ(weight_grid(WeightProfile::uniform(3), 5).size(), 1u);
}

TEST(Cut, RemovesOnlyEverywhereBeatenTuples) {
  SemiringSpec s({DimKind::Weighted, DimKind::Weighted});
  auto f = build(s, {MultiCost{1, 9}, MultiCost{4, 4}, MultiCost{9, 1}, MultiCost{3, 8}});
  // Uniform weights: sums 10, 8, 10, 11; only (4,4) survives.
  auto k = cut(s, f, WeightProfile::uniform(2));
  EXPECT_EQ(k.costs(), (std::vector<MultiCost>{MultiCost{4, 4}}));
  // With slack the extremes win somewhere on the grid.
  auto wide = cut(s, f, WeightProfile{{1, 1}, {1, 1}}, 5);
  EXPECT_GE(wide.size(), 3u);
}

TEST(Cut, RequiresWeightedDimensions) {
  SemiringSpec s({DimKind::Bandwidth, DimKind::Weighted});
  EXPECT_THROW(cut(s, Frontier<int>{}, WeightProfile::uniform(2)), UnsupportedConfiguration);
}

TEST(Cut, SubsetIdempotentAndContainsScalarOptimum) {
  Rng rng(99);
  for (int round = 0; round < 200; ++round) {
    std::size_t dims = 2 + uniform_below(rng, 2);
    std::vector<DimKind> ks(dims, DimKind::Weighted);
    SemiringSpec s(ks);
    auto f = build(s, random_costs(rng, dims, 1 + uniform_below(rng, 20), 20));
    WeightProfile w;
    for (std::size_t d = 0; d < dims; ++d) {
      w.weights.push_back(Rational{uniform_in(rng, 1, 5)});
      w.slack.push_back(uniform_below(rng, 2) ? Rational{0} : Rational{uniform_in(rng, 0, 1)});
    }
    auto k = cut(s, f, w);
    auto kc = k.costs(), fc = f.costs();
    EXPECT_TRUE(std::includes(fc.begin(), fc.end(), kc.begin(), kc.end()));
    EXPECT_EQ(cut(s, k, w).costs(), kc);
    WeightProfile exact{w.weights, std::vector<Rational>(dims, Rational{0})};
    auto k0 = cut(s, f, exact).costs();
    for (const auto& b : oracle::scalar_best(ks, fc, w.weights))
      EXPECT_TRUE(std::find(k0.begin(), k0.end(), b) != k0.end());
  }
}

TEST(Hoare, CompactDropsDominatedAndZero) {
  SemiringSpec s({DimKind::Weighted, DimKind::Weighted});
  HoareSemiring h(s);
  auto x = h.compact({MultiCost{3, 3}, s.zero(), MultiCost{1, 5}, MultiCost{4, 4}, MultiCost{3, 3}});
  EXPECT_EQ(x, (HoareSemiring::Element{MultiCost{1, 5}, MultiCost{3, 3}}));
  EXPECT_EQ(h.combine(x, h.one()), x);
  EXPECT_EQ(h.choose(x, h.zero()), x);
  EXPECT_EQ(h.combine(x, h.zero()), h.zero());
  EXPECT_EQ(h.compare(HoareSemiring::Element{MultiCost{1, 1}}, x), Ordering::Better);
}
