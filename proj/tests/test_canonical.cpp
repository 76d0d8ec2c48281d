#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "metric_lines/canonical.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/families.hpp"
#include "metric_lines/io.hpp"
#include "oracles.hpp"

namespace metric_lines {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// Canonical codes split the labeled graphs into the same classes as the
// n!-permutation minimum.
TEST(CanonicalTest, PartitionMatchesBruteForceMinimum) {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::vector<bool>, CanonicalCode> by_oracle;
    std::set<CanonicalCode> seen;
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      const auto min_code = oracle::brute_force_min_code(g);
      const CanonicalCode code = canonical_form(g);
      auto [it, fresh] = by_oracle.emplace(min_code, code);
      if (fresh) {
        EXPECT_TRUE(seen.insert(code).second) << "two classes share a code at n=" << n;
      } else {
        ASSERT_EQ(it->second, code) << to_graph6(g);
      }
    }
  }
}

TEST(CanonicalTest, SixVertexClassesAgainstBruteForce) {
  std::mt19937_64 rng(6);
  std::map<std::vector<bool>, CanonicalCode> by_oracle;
  std::map<CanonicalCode, std::vector<bool>> by_code;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    const auto min_code = oracle::brute_force_min_code(g);
    const CanonicalCode code = canonical_form(g);
    EXPECT_EQ(by_oracle.emplace(min_code, code).first->second, code);
    EXPECT_EQ(by_code.emplace(code, min_code).first->second, min_code);
  }
}

TEST(CanonicalTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      const Graph g = oracle::random_graph(n, trial % 2 == 0 ? 0.3 : 0.6, rng);
      const Graph h = g.permuted(oracle::random_permutation(n, rng));
      ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_graph6(g) << " vs " << to_graph6(h);
    }
  }
}

TEST(CanonicalTest, InvariantOnLargerStructuredGraphs) {
  std::mt19937_64 rng(7);
  const Graph petersen = from_graph6("IheA@GUAo");
  const std::vector<Graph> graphs = {petersen, named({FamilyTag::M2p, 6}), named({FamilyTag::Kprime2p, 6}),
                                     named(FamilyTag::M8hat), named({FamilyTag::Kp, 12})};
  for (const Graph& g : graphs) {
    const CanonicalCode code = canonical_form(g);
    for (int trial = 0; trial < 50; ++trial) {
      ASSERT_EQ(canonical_form(g.permuted(oracle::random_permutation(g.order(), rng))), code);
    }
  }
}

TEST(CanonicalTest, LabelingProducesRepresentative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    EXPECT_EQ(CanonicalCode::of_labeled(g.permuted(lab.position)), lab.code);
    EXPECT_EQ(lab.code.graph(), g.permuted(lab.position));
    EXPECT_EQ(canonical_form(lab.code.graph()), lab.code);
  }
}

TEST(CanonicalTest, DistinguishedVerticesGoLast) {
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const CanonicalLabeling end = canonical_labeling(p4, VertexSet{0});
  EXPECT_EQ(end.position[0], 3);
  // An end vertex and an inner vertex are told apart.
  EXPECT_NE(canonical_labeling(p4, VertexSet{1}).code, end.code);
  EXPECT_EQ(canonical_labeling(p4, VertexSet{3}).code, end.code);
}

TEST(CanonicalTest, CodeBytesAndGraph6) {
  const CanonicalCode code = CanonicalCode::of_labeled(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(code.order(), 3);
  EXPECT_EQ(code.bytes(), std::vector<std::uint8_t>{0xA0});
  EXPECT_EQ(code.graph6(), "Bg");
  EXPECT_EQ(code_of([] { CanonicalCode::of_labeled(named({FamilyTag::Kp, 13})); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { canonical_form(named({FamilyTag::Kp, 13})); }), ErrorCode::TooLarge);
}

TEST(IsomorphismTest, Examples) {
  const Graph c4 = named(FamilyTag::K22);
  EXPECT_TRUE(are_isomorphic(c4, Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
  EXPECT_FALSE(are_isomorphic(c4, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_FALSE(are_isomorphic(c4, named(FamilyTag::K12)));
  // Same degree sequence, not isomorphic: C6 and two triangles.
  const Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two_k3 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(are_isomorphic(c6, two_k3));
  // The prism with a rotated matching, and K3,3 written as C6 plus diagonals.
  const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 4}, {1, 5}, {2, 3}});
  EXPECT_TRUE(are_isomorphic(named(FamilyTag::M6), prism));
  const Graph k33 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(are_isomorphic(named(FamilyTag::M6), k33));
  EXPECT_EQ(code_of([] { are_isomorphic(named({FamilyTag::Kp, 13}), named({FamilyTag::Kp, 13})); }),
            ErrorCode::TooLarge);
}

TEST(ClassifyTest, FamilyMembersUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const FamilyName& name : diameter_two_family()) {
    const Graph g = named(name).permuted(oracle::random_permutation(named(name).order(), rng));
    const auto found = classify_family(g);
    ASSERT_TRUE(found.has_value()) << to_string(name);
    EXPECT_EQ(found->tag, name.tag);
  }
  for (const FamilyName& name : diameter_three_examples()) {
    EXPECT_FALSE(classify_family(named(name)).has_value());
    const auto found = classify_family(named(name), true);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->tag, name.tag);
  }
}

TEST(ClassifyTest, NonMembers) {
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_FALSE(classify_family(c5).has_value());
  EXPECT_FALSE(classify_family(c5, true).has_value());
  EXPECT_FALSE(classify_family(from_graph6("IheA@GUAo")).has_value());
}

TEST(EnumerateTest, SmallCounts) {
  EXPECT_EQ(enumerate_codes({.n = 1}).size(), 1U);
  EXPECT_EQ(enumerate_codes({.n = 3}).size(), 2U);
  EXPECT_EQ(enumerate_codes({.n = 4}).size(), 6U);
  EXPECT_EQ(enumerate_connected({.n = 4, .diameter = 2}, [](const Graph&) {}), 4U);
}

TEST(EnumerateTest, ConnectedCountsThroughEight) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_codes({.n = n}).size(), expected[n - 1]) << n;
}

TEST(EnumerateTest, AllGraphCountsThroughEight) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_codes({.n = n, .connected = false}).size(), expected[n - 1]) << n;
}

TEST(EnumerateTest, MatchesNaiveSweep) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<CanonicalCode> naive;
    for (const Graph& g : enumerate_naive(n)) naive.push_back(canonical_form(g));
    EXPECT_EQ(enumerate_codes({.n = n}), naive) << n;
  }
}

TEST(EnumerateTest, NaiveSweepAgainstFloydConnectivity) {
  // Independent count of connected classes: labeled sweep, Floyd-Warshall
  // connectivity, brute-force minimum codes.
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<bool>> classes;
    for (const Graph& g : oracle::all_labeled_graphs(n))
      if (oracle::connected_by_floyd(g)) classes.insert(oracle::brute_force_min_code(g));
    EXPECT_EQ(enumerate_naive(n).size(), classes.size()) << n;
  }
}

TEST(EnumerateTest, DiameterFilterAgainstFloyd) {
  for (int n = 3; n <= 7; ++n) {
    for (int diam = 1; diam <= 3; ++diam) {
      std::size_t expected = 0;
      for (const Graph& g : enumerate_naive(n)) expected += oracle::diameter_by_floyd(g) == diam;
      std::size_t got = enumerate_connected({.n = n, .diameter = diam}, [&](const Graph& g) {
        EXPECT_EQ(oracle::diameter_by_floyd(g), diam);
      });
      EXPECT_EQ(got, expected) << n << " " << diam;
    }
  }
}

TEST(EnumerateTest, VisitOrderAndRepresentatives) {
  std::vector<CanonicalCode> visited;
  enumerate_connected({.n = 6}, [&](const Graph& g) { visited.push_back(CanonicalCode::of_labeled(g)); });
  EXPECT_EQ(visited, enumerate_codes({.n = 6}));
}

TEST(EnumerateTest, ParallelMatchesSerial) {
  for (int n : {6, 7, 8}) {
    EXPECT_EQ(enumerate_codes({.n = n, .jobs = 1}), enumerate_codes({.n = n, .jobs = 4})) << n;
  }
  std::vector<std::string> serial, parallel;
  enumerate_connected({.n = 7, .diameter = 2, .jobs = 1}, [&](const Graph& g) { serial.push_back(to_graph6(g)); });
  enumerate_connected({.n = 7, .diameter = 2, .jobs = 4}, [&](const Graph& g) { parallel.push_back(to_graph6(g)); });
  EXPECT_EQ(serial, parallel);
}

TEST(EnumerateTest, DistinctConnected) {
  std::mt19937_64 rng(5);
  std::vector<Graph> stream;
  for (const Graph& g : enumerate_naive(5)) {
    stream.push_back(g);
    stream.push_back(g.permuted(oracle::random_permutation(5, rng)));
  }
  stream.push_back(Graph::from_edges(5, {{0, 1}}));
  stream.push_back(named(FamilyTag::K22));
  EXPECT_EQ(distinct_connected(stream, 5), enumerate_codes({.n = 5}));
}

TEST(EnumerateTest, Limits) {
  EXPECT_EQ(code_of([] { enumerate_codes({.n = 11}); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_codes({.n = 0}); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_naive(8); }), ErrorCode::TooLarge);
}

}  // namespace
}  // namespace metric_lines
