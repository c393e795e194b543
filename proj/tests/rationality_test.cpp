#include "symcoh/rationality.hpp"

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "symcoh/statistics.hpp"

namespace symcoh {
namespace {

using Blocks = std::vector<std::vector<unsigned>>;

TEST(EnumerateGraphs, Counts) {
  auto count = [](unsigned r) {
    std::size_t c = 0;
    for ([[maybe_unused]] const auto& g : enumerate_graphs(r)) ++c;
    return c;
  };
  EXPECT_EQ(count(1), 1u);
  EXPECT_EQ(count(2), 2u);
  EXPECT_EQ(count(4), 64u);
  EXPECT_EQ(count(5), 1024u);
  EXPECT_THROW(enumerate_graphs(0), DomainError);
  EXPECT_THROW(enumerate_graphs(13), DomainError);
}

TEST(EnumerateGraphs, IncreasingMaskOrder) {
  unsigned long expected = 0;
  for (const auto& g : enumerate_graphs(4)) EXPECT_EQ(g.edges().to_ulong(), expected++);
}

TEST(LabeledGraph, EdgeIndexing) {
  // r = 4 pairs in order: 12 13 14 23 24 34.
  EXPECT_EQ(LabeledGraph::edge_index(4, 1, 2), 0u);
  EXPECT_EQ(LabeledGraph::edge_index(4, 1, 4), 2u);
  EXPECT_EQ(LabeledGraph::edge_index(4, 2, 3), 3u);
  EXPECT_EQ(LabeledGraph::edge_index(4, 4, 3), 5u);
  EXPECT_THROW(LabeledGraph::edge_index(4, 2, 2), DomainError);
  LabeledGraph g(12);
  g.add_edge(11, 12);
  EXPECT_TRUE(g.has_edge(12, 11));
  EXPECT_EQ(g.edge_count(), 1u);
  LabeledGraph::EdgeMask stray;
  stray.set(3);
  EXPECT_THROW(LabeledGraph(2, stray), ContractViolation);
}

TEST(GraphComponents, Examples) {
  EXPECT_EQ(graph_components(LabeledGraph(3)).blocks(), (Blocks{{1}, {2}, {3}}));
  EXPECT_EQ(graph_components(LabeledGraph(3).add_edge(1, 2).add_edge(2, 3)).blocks(), (Blocks{{1, 2, 3}}));
  EXPECT_EQ(graph_components(LabeledGraph(4).add_edge(1, 2)).blocks(), (Blocks{{1, 2}, {3}, {4}}));
  EXPECT_EQ(graph_components(LabeledGraph(5).add_edge(4, 2).add_edge(5, 1)).blocks(), (Blocks{{1, 5}, {2, 4}, {3}}));
}

TEST(ChromaticSum, Examples) {
  EXPECT_EQ(chromatic_sum_check(1), -1);
  EXPECT_EQ(chromatic_sum_check(2), 2);
  EXPECT_EQ(chromatic_sum_check(3), -6);
  EXPECT_THROW(chromatic_sum_check(9), DomainError);
}

TEST(ChromaticSum, SignedFactorial) {
  for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(chromatic_sum_check(r), (r % 2 == 0 ? 1 : -1) * factorial(r)) << r;
}

TEST(ChromaticSum, ConnectedGraphSignedCount) {
  // Summing (-1)^e over connected graphs on a vertices gives (-1)^(a-1) (a-1)!.
  for (unsigned r = 1; r <= 5; ++r) {
    std::int64_t total = 0;
    for (const auto& g : enumerate_graphs(r))
      if (graph_components(g).block_count() == 1) total += g.edge_count() % 2 == 0 ? 1 : -1;
    EXPECT_EQ(total, ((r - 1) % 2 == 0 ? 1 : -1) * factorial(r - 1)) << r;
  }
}

TEST(GraphWeight, Examples) {
  EXPECT_TRUE(rf_eq(graph_weight_rf(LabeledGraph(1), WeightSpec{{2, 3}}), RationalFunction::geometric(6)));
  const WeightSpec ones{{1, 1}, {1, 1}};
  const auto sq = rf_mul(RationalFunction::geometric(1), RationalFunction::geometric(1));
  EXPECT_TRUE(rf_eq(graph_weight_rf(LabeledGraph(2), ones), sq));
  EXPECT_TRUE(rf_eq(graph_weight_rf(LabeledGraph(2).add_edge(1, 2), ones), RationalFunction::geometric(2)));
  // lcm(2, 3) * (1 + 2) = 18.
  EXPECT_TRUE(rf_eq(graph_weight_rf(LabeledGraph(2).add_edge(1, 2), WeightSpec{{2, 1}, {3, 2}}),
                    RationalFunction::geometric(18)));
  EXPECT_THROW(graph_weight_rf(LabeledGraph(3), ones), ContractViolation);
}

TEST(WeightSpec, Validation) {
  EXPECT_THROW(WeightSpec(std::vector<WeightPair>{}), DomainError);
  EXPECT_THROW((WeightSpec{{1, 0}}), DomainError);
}

TEST(QGraphSum, Examples) {
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t l = 1; l <= 3; ++l)
      EXPECT_TRUE(rf_eq(q_graph_sum(WeightSpec{{k, l}}), RationalFunction::geometric(k * l)));
  const WeightSpec ones{{1, 1}, {1, 1}};
  const auto q = q_graph_sum(ones);
  EXPECT_EQ(rf_expand(q, 5)[5], 4);
  EXPECT_EQ(rf_asymptotics(q), (Asymptotics{0, ExactRatio(2)}));
}

TEST(QGraphSum, MatchesBruteForceGraphSum) {
  // Summing E_Y graph by graph must give the bucketed result.
  for (const WeightSpec& spec : {WeightSpec{{1, 2}, {2, 1}, {3, 1}}, WeightSpec{{2, 2}, {2, 1}, {1, 3}, {1, 1}}}) {
    RationalFunction direct;
    for (const auto& g : enumerate_graphs(static_cast<unsigned>(spec.size())))
      direct = rf_add(direct, rf_scale(graph_weight_rf(g, spec), g.edge_count() % 2 == 0 ? 1 : -1));
    EXPECT_TRUE(rf_eq(direct, q_graph_sum(spec))) << spec.to_string();
  }
}

TEST(TupleCountOracle, Examples) {
  const WeightSpec ones{{1, 1}, {1, 1}};
  EXPECT_EQ(tuple_count_oracle(5, ones), 4);
  EXPECT_EQ(tuple_count_oracle(2, ones), 0);
  EXPECT_EQ(tuple_count_oracle(3, ones), 2);
  EXPECT_THROW(tuple_count_oracle(61, ones), ResourceError);
  EXPECT_THROW(tuple_count_oracle(5, WeightSpec{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}), ResourceError);
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(2, 1, 4, 3), 1u);
  EXPECT_EQ(theta(2, 1, 3, 3), 0u);
  EXPECT_EQ(theta(1, 0, 5, 0), 1u);
  EXPECT_EQ(theta(3, 2, 6, 1), 0u);
}

TEST(ThetaSumOracle, Examples) {
  EXPECT_EQ(theta_sum_oracle(4, WeightSpec{{2, 1}}), 3);
  EXPECT_EQ(theta_sum_oracle(4, WeightSpec{{2, 1}, {2, 1}}), 0);
  EXPECT_EQ(theta_sum_oracle(8, WeightSpec{{2, 1}, {2, 1}}), 6);
}

TEST(Rationality, GraphSumCountsTuplesRandomSpecs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    std::vector<WeightPair> pairs;
    for (std::size_t i = 0; i < r; ++i) pairs.push_back({1 + rng() % 4, 1 + rng() % 3});
    const WeightSpec spec(pairs);
    const auto q = q_graph_sum(spec);
    const auto s = rf_expand(q, 40);
    for (std::uint64_t n = 1; n <= 40; ++n) ASSERT_EQ(s[n], tuple_count_oracle(n, spec)) << spec.to_string();
    const auto a = rf_asymptotics(q);
    EXPECT_EQ(a.total_degree, 0);
    EXPECT_EQ(a.leading_coefficient, ExactRatio((r % 2 == 0 ? 1 : -1) * factorial(static_cast<unsigned>(r))));
  }
}

TEST(Rationality, ThetaSumIsQTimesP) {
  for (const WeightSpec& spec : {WeightSpec{{1, 2}}, WeightSpec{{2, 1}, {1, 2}}, WeightSpec{{1, 1}, {2, 2}, {3, 1}}}) {
    const auto s = expand_with_partition_factor(q_graph_sum(spec), 24);
    for (std::uint64_t n = 1; n <= 24; ++n) ASSERT_EQ(theta_sum_oracle(n, spec), s[n]) << spec.to_string() << n;
  }
}

TEST(Rationality, SingleSpecMatchesG) {
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t l = 1; l <= 3; ++l) {
      const auto s = expand_with_partition_factor(q_graph_sum(WeightSpec{{k, l}}), 40);
      for (std::uint64_t n = 0; n <= 40; ++n) ASSERT_EQ(s[n], G_closed(k, l, n));
    }
}

TEST(Rationality, OrderedTuplesAreRFactorialTimesC) {
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (unsigned r = 1; r <= 3; ++r) {
      const WeightSpec spec(std::vector<WeightPair>(r, WeightPair{k, 1}));
      for (std::uint64_t n = 0; n <= 30; ++n)
        ASSERT_EQ(theta_sum_oracle(n, spec), factorial(r) * CD_oracle(k, r, n).c) << k << ' ' << r << ' ' << n;
    }
}

}  // namespace
}  // namespace symcoh
