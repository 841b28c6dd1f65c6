#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lstree/cd_tree.hpp"
#include "lstree/errors.hpp"
#include "lstree/neighbor_graph.hpp"
#include "oracles.hpp"

using namespace lstree;

namespace {

struct GraphAt {
  std::vector<bool> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  bool operator==(const GraphAt&) const = default;
};

GraphAt graph_at(const DistanceMatrix& d, const std::vector<double>& radius, double alpha, double r,
                 const std::set<std::pair<std::size_t, std::size_t>>& universe) {
  GraphAt g;
  for (double rk : radius) g.vertices.push_back(rk <= r);
  for (const auto& [a, b] : universe) {
    if (g.vertices[a] && g.vertices[b] && d(a, b) / alpha <= r) g.edges.emplace(a, b);
  }
  return g;
}

bool same_nodes(const CDTree& a, const CDTree& b) {
  return a.nodes == b.nodes && a.n == b.n && a.k == b.k && a.alpha == b.alpha &&
         a.k_radius == b.k_radius;
}

}  // namespace

TEST(CDRadiusGrid, Examples) {
  const auto d = pairwise_distances(fixtures::line({0, 1, 3}));
  EXPECT_EQ(cd_radius_grid(d, 1.0), (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(cd_radius_grid(d, 2.0), (std::vector<double>{3, 2, 1.5, 1, 0.5}));
  EXPECT_THROW(cd_radius_grid(d, 0.0), data_error);
}

TEST(CDRadiusGrid, AlphaOneIsDistinctEdgeLengths) {
  std::mt19937_64 rng(61);
  const auto d = pairwise_distances(oracle::random_points(rng, 15, 2));
  std::set<double, std::greater<>> lengths;
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = i + 1; j < 15; ++j) lengths.insert(d(i, j));
  }
  EXPECT_EQ(cd_radius_grid(d, 1.0), std::vector<double>(lengths.begin(), lengths.end()));
}

TEST(CDTreeExact, ThreePointLine) {
  const auto tree = cd_tree_exact(fixtures::line({0, 1, 3}), 1, 1.0);
  ASSERT_EQ(tree.nodes.size(), 1u);
  const auto& root = tree.node(0);
  EXPECT_EQ(root.size(), 3u);
  EXPECT_EQ(root.r1, 3.0);
  EXPECT_EQ(root.r2, 0.0);
  EXPECT_EQ(tree.k_radius, (std::vector<double>{1, 1, 2}));
}

TEST(CDTreeExact, TwoPoints) {
  const auto tree = cd_tree_exact(fixtures::line({0, 2.5}), 1, 1.0);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_EQ(tree.node(0).r1, 2.5);
  EXPECT_EQ(tree.node(0).r2, 0.0);
}

TEST(CDTreeExact, PreconditionErrors) {
  const auto x = fixtures::line({0, 1, 3});
  EXPECT_THROW(cd_tree_exact(x, 0, 1.0), data_error);
  EXPECT_THROW(cd_tree_exact(x, 3, 1.0), data_error);
  EXPECT_THROW(cd_tree_exact(x, 1, -1.0), data_error);
  EXPECT_THROW(cd_tree_knn_start(x, 3, 1.0), data_error);
  const PointMatrix dup(3, 1, {0, 0, 1});
  EXPECT_THROW(cd_tree_exact(dup, 1, 1.0), data_error);
}

TEST(CDTreeKnnStart, TwoTriangles) {
  const auto tree = cd_tree_knn_start(fixtures::two_triangles(), 2, 1.0);
  const auto leaves = tree.leaves();
  ASSERT_EQ(leaves.size(), 2u);
  EXPECT_EQ(tree.node(leaves[0]).members, (std::vector<index_t>{0, 1, 2}));
  EXPECT_EQ(tree.node(leaves[1]).members, (std::vector<index_t>{3, 4, 5}));
  const auto exact = cd_tree_exact(fixtures::two_triangles(), 2, 1.0);
  ASSERT_EQ(exact.leaves().size(), 2u);
  EXPECT_EQ(exact.node(exact.leaves()[0]).members, (std::vector<index_t>{0, 1, 2}));
}

TEST(CDTreeKnnStart, FullNeighborhoodEqualsExact) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 25);
    const auto d = pairwise_distances(oracle::random_points(rng, n, oracle::uniform_int(rng, 1, 3)));
    for (double alpha : {1.0, 1.4, 2.0}) {
      const auto exact = cd_tree_exact(d, n - 1, alpha);
      const auto approx = cd_tree_knn_start(d, n - 1, alpha);
      EXPECT_TRUE(same_nodes(exact, approx));
      EXPECT_EQ(approx.start, CDStart::knn);
    }
  }
}

TEST(CDTree, EqualsPerRadiusBruteForce) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 25);
    const std::size_t k = oracle::uniform_int(rng, 1, std::min<std::size_t>(4, n - 1));
    const auto d = pairwise_distances(oracle::random_points(rng, n, oracle::uniform_int(rng, 1, 3)));
    for (double alpha : {1.0, 1.4, 2.0}) {
      const auto exact = cd_tree_exact(d, k, alpha);
      ASSERT_EQ(oracle::canonical(exact), oracle::brute_force_cd(d, k, alpha, false));
      const auto approx = cd_tree_knn_start(d, k, alpha);
      ASSERT_EQ(oracle::canonical(approx), oracle::brute_force_cd(d, k, alpha, true));
      ASSERT_EQ(oracle::violations(exact), "");
      ASSERT_EQ(oracle::violations(approx), "");
    }
  }
}

TEST(CDTree, GraphConstantBetweenGridRadii) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 3, 25);
    const std::size_t k = oracle::uniform_int(rng, 1, std::min<std::size_t>(4, n - 1));
    const auto d = pairwise_distances(oracle::random_points(rng, n, 2));
    const auto radius = oracle::kth_radius(d, k);
    const auto universe = oracle::cd_edge_universe(d, k, false);
    for (double alpha : {1.0, 1.4, 2.0}) {
      const auto grid = cd_radius_grid(d, alpha);
      for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        const double mid = 0.5 * (grid[g] + grid[g + 1]);
        ASSERT_EQ(graph_at(d, radius, alpha, mid, universe),
                  graph_at(d, radius, alpha, grid[g + 1], universe));
      }
    }
  }
}

TEST(CDTree, RadiiShrinkDownTheTree) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 40);
    const auto x = oracle::random_points(rng, n, 2);
    const auto tree = cd_tree_knn_start(x, oracle::uniform_int(rng, 1, std::min<std::size_t>(5, n - 1)), 1.4);
    for (const auto& [id, node] : tree.nodes) {
      EXPECT_GE(node.r1, node.r2);
      if (node.parent) EXPECT_EQ(node.r1, tree.node(*node.parent).r2);
    }
  }
}

TEST(CDTreeKnnStart, ComponentsRefineExactComponents) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 4, 25);
    const std::size_t k = oracle::uniform_int(rng, 1, 3);
    const auto d = pairwise_distances(oracle::random_points(rng, n, 2));
    const auto exact = cd_tree_exact(d, k, 1.4);
    const auto approx = cd_tree_knn_start(d, k, 1.4);
    for (const auto& [id, node] : approx.nodes) {
      if (!node.parent && node.r1 == node.r2) continue;  // virtual root
      const double r = node.r1;
      bool covered = false;
      for (const auto& [eid, e] : exact.nodes) {
        if (e.r2 < r && r <= e.r1 &&
            std::includes(e.members.begin(), e.members.end(), node.members.begin(), node.members.end())) {
          covered = true;
        }
      }
      EXPECT_TRUE(covered) << "node " << id;
    }
  }
}
