#include <gtest/gtest.h>

#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/families.hpp"
#include "metric_lines/graph.hpp"
#include "oracles.hpp"

namespace metric_lines {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(VertexSetTest, AlgebraAndIteration) {
  const VertexSet a{0, 2, 5};
  const VertexSet b{2, 3};
  EXPECT_EQ(a | b, (VertexSet{0, 2, 3, 5}));
  EXPECT_EQ(a & b, VertexSet{2});
  EXPECT_EQ(a - b, (VertexSet{0, 5}));
  EXPECT_EQ(a.complement(6), (VertexSet{1, 3, 4}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.to_vector(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(a.to_string(), "{0 2 5}");
  EXPECT_EQ(VertexSet::full(64).size(), 64);
  EXPECT_TRUE(VertexSet{}.is_subset_of(a));
  EXPECT_LT((VertexSet{1}), (VertexSet{0, 1}));
}

TEST(GraphTest, FromEdgesPath) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(diameter(g), 2);
}

TEST(GraphTest, SingleVertexAndDuplicates) {
  const Graph one = Graph::from_edges(1, {});
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.edge_count(), 0);
  EXPECT_EQ(diameter(one), 0);

  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 0}});
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_EQ(c4, named(FamilyTag::K22));
}

TEST(GraphTest, ConstructionErrors) {
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {{0, 3}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {{-1, 0}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {{1, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { Graph::from_edges(65, {}); }), ErrorCode::TooManyVertices);
  EXPECT_EQ(code_of([] { Graph::from_edges(0, {}); }), ErrorCode::TooManyVertices);
  EXPECT_NO_THROW(Graph::from_edges(64, {{0, 63}}));
}

TEST(GraphTest, DisconnectedIsAnError) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(code_of([&] { distance_matrix(g); }), ErrorCode::Disconnected);
  EXPECT_EQ(code_of([&] { diameter(g); }), ErrorCode::Disconnected);
}

TEST(GraphTest, DistanceExamples) {
  // K23 labels a=0, c=1, x=2, b=3, d=4; b and d share a part.
  EXPECT_EQ(distance_matrix(named(FamilyTag::K23))(3, 4), 2);
  EXPECT_EQ(distance_matrix(named(FamilyTag::K22))(0, 2), 2);

  // M6: a1 = 0, a2' = 4.
  const Graph m6 = named(FamilyTag::M6);
  EXPECT_EQ(oracle::floyd_warshall(m6)[0][4], 2);
  EXPECT_EQ(distance_matrix(m6)(0, 4), 2);
}

TEST(GraphTest, DiameterExamples) {
  EXPECT_EQ(diameter(named({FamilyTag::Kp, 4})), 1);
  for (const FamilyName& f : diameter_two_family()) EXPECT_EQ(diameter(named(f)), 2) << to_string(f);
  EXPECT_EQ(diameter(named(FamilyTag::M8minus)), 3);
}

TEST(GraphTest, SecondNeighborhoodExamples) {
  const Graph k23 = named(FamilyTag::K23);
  EXPECT_EQ(neighbors2(k23, 2), (VertexSet{3, 4}));
  EXPECT_TRUE(neighbors2(named({FamilyTag::Kp, 4}), 1).empty());

  const Graph m6 = named(FamilyTag::M6);
  EXPECT_EQ(neighbors2(m6, 0), (VertexSet{4, 5}));
  EXPECT_EQ(distance_matrix(m6).sphere(0, 2), (VertexSet{4, 5}));
}

TEST(GraphTest, DistanceMatrixMatchesFloydWarshallExhaustively) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_naive(n)) {
      const DistanceMatrix d = distance_matrix(g);
      const auto fw = oracle::floyd_warshall(g);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          ASSERT_EQ(d(i, j), fw[i][j]);
          ASSERT_EQ(d(i, j) == 1, g.adjacent(i, j));
          ASSERT_EQ(d(i, j), d(j, i));
        }
      }
      EXPECT_EQ(diameter_at_most_two(g), d.diameter() <= 2);
    }
  }
}

TEST(GraphTest, VertexPartitionCountsUnderDiameterTwo) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_naive(n)) {
      if (!diameter_at_most_two(g)) continue;
      for (int x = 0; x < n; ++x) {
        ASSERT_EQ(n, g.degree(x) + neighbors2(g, x).size() + 1);
        ASSERT_EQ(neighbors2(g, x), distance_matrix(g).sphere(x, 2));
      }
    }
  }
}

TEST(GraphTest, PermutedAndEdges) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const std::vector<int> perm{2, 0, 1};
  const Graph h = g.permuted(perm);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_THROW(Graph::from_adjacency({VertexSet{1}, VertexSet{}}), Error);
}

}  // namespace
}  // namespace metric_lines
