#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lstree/errors.hpp"
#include "lstree/neighbor_graph.hpp"
#include "oracles.hpp"

using namespace lstree;

TEST(PairwiseDistances, ThreeFourFive) {
  const PointMatrix x(2, 2, {0, 0, 3, 4});
  EXPECT_EQ(pairwise_distances(x)(0, 1), 5.0);
}

TEST(PairwiseDistances, OneDimensional) {
  const auto d = pairwise_distances(fixtures::line({0, 1, 3}));
  EXPECT_EQ(d.values(), (std::vector<double>{0, 1, 3, 1, 0, 2, 3, 2, 0}));
}

TEST(PairwiseDistances, ZeroDiagonalOnRandomInput) {
  std::mt19937_64 rng(1);
  const auto d = pairwise_distances(oracle::random_points(rng, 30, 4));
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(d(i, i), 0.0);
}

TEST(PairwiseDistances, OverflowIsAnError) {
  const PointMatrix x(2, 1, {-1e308, 1e308});
  EXPECT_THROW(pairwise_distances(x), data_error);
}

TEST(Knn, KRadiusOnFourPoints) {
  const auto r = knn(pairwise_distances(fixtures::line({0, 0.1, 0.2, 10})), 2);
  ASSERT_EQ(r.k_radius.size(), 4u);
  EXPECT_DOUBLE_EQ(r.k_radius[0], 0.2);
  EXPECT_DOUBLE_EQ(r.k_radius[1], 0.1);
  EXPECT_DOUBLE_EQ(r.k_radius[2], 0.2);
  EXPECT_DOUBLE_EQ(r.k_radius[3], 9.9);
}

TEST(Knn, FullNeighborhood) {
  std::mt19937_64 rng(2);
  const std::size_t n = 12;
  const auto r = knn(pairwise_distances(oracle::random_points(rng, n, 2)), n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = std::vector<index_t>(r.neighbors(i).begin(), r.neighbors(i).end());
    std::sort(row.begin(), row.end());
    std::vector<index_t> expected;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) expected.push_back(static_cast<index_t>(j));
    }
    EXPECT_EQ(row, expected);
  }
}

TEST(Knn, TiesGoToLowerIndex) {
  // Point 1 sits at distance 1 from both 0 and 2.
  const auto r = knn(pairwise_distances(fixtures::line({0, 1, 2})), 1);
  EXPECT_EQ(r.neighbors(1)[0], 0u);
}

TEST(Knn, KOutOfRange) {
  const auto d = pairwise_distances(fixtures::line({0, 1, 2}));
  EXPECT_THROW(knn(d, 0), data_error);
  EXPECT_THROW(knn(d, 3), data_error);
}

TEST(Knn, RadiusIsMaxOverListedNeighbors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 40);
    const std::size_t k = oracle::uniform_int(rng, 1, n - 1);
    const auto d = pairwise_distances(oracle::random_points(rng, n, 2));
    const auto r = knn(d, k);
    const auto expected = oracle::kth_radius(d, k);
    for (std::size_t i = 0; i < n; ++i) {
      double worst = 0.0;
      for (index_t j : r.neighbors(i)) {
        EXPECT_NE(j, i);
        worst = std::max(worst, d(i, j));
      }
      EXPECT_EQ(worst, r.k_radius[i]);
      EXPECT_EQ(expected[i], r.k_radius[i]);
    }
  }
}

TEST(Knn, PermutationInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 3, 30);
    const std::size_t k = oracle::uniform_int(rng, 1, n - 1);
    const auto x = oracle::random_points(rng, n, 2);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> shuffled(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      shuffled[2 * i] = x(perm[i], 0);
      shuffled[2 * i + 1] = x(perm[i], 1);
    }
    const auto a = knn(pairwise_distances(x), k);
    const auto b = knn(pairwise_distances(PointMatrix(n, 2, shuffled)), k);
    for (std::size_t i = 0; i < n; ++i) {
      // Continuous coordinates have no distance ties, so sets must agree.
      std::vector<std::size_t> mapped;
      for (index_t j : b.neighbors(i)) mapped.push_back(perm[j]);
      std::vector<std::size_t> original(a.neighbors(perm[i]).begin(), a.neighbors(perm[i]).end());
      std::sort(mapped.begin(), mapped.end());
      std::sort(original.begin(), original.end());
      EXPECT_EQ(mapped, original);
      EXPECT_EQ(b.k_radius[i], a.k_radius[perm[i]]);
    }
  }
}

TEST(KnnGraph, TwoDisjointTriangles) {
  const auto g = knn_graph(pairwise_distances(fixtures::two_triangles()), 2);
  const std::vector<std::pair<index_t, index_t>> expected{{0, 1}, {0, 2}, {1, 2},
                                                          {3, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.edge_count(), 6u);
}

TEST(KnnGraph, CompleteAtKNMinusOne) {
  std::mt19937_64 rng(5);
  const std::size_t n = 9;
  const auto g = knn_graph(pairwise_distances(oracle::random_points(rng, n, 3)), n - 1);
  EXPECT_EQ(g.edge_count(), n * (n - 1) / 2);
}

TEST(KnnGraph, MinimalGraph) {
  const auto g = knn_graph(pairwise_distances(fixtures::line({0, 1})), 1);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<index_t, index_t>>{{0, 1}}));
}

TEST(KnnGraph, UnionSymmetrizationProperties) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 2, 50);
    const std::size_t k = oracle::uniform_int(rng, 1, n - 1);
    const auto d = pairwise_distances(oracle::random_points(rng, n, oracle::uniform_int(rng, 1, 3)));
    const auto r = knn(d, k);
    const auto g = knn_graph(r);
    EXPECT_GE(2 * g.edge_count(), n * k);
    EXPECT_LE(g.edge_count(), n * k);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& adj = g.adjacency[i];
      EXPECT_GE(adj.size(), k);
      EXPECT_TRUE(std::is_sorted(adj.begin(), adj.end()));
      EXPECT_EQ(std::count(adj.begin(), adj.end(), i), 0);
      for (index_t j : adj) {
        const auto& back = g.adjacency[j];
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), static_cast<index_t>(i)));
        const auto ni = r.neighbors(i);
        const auto nj = r.neighbors(j);
        const bool listed = std::find(ni.begin(), ni.end(), j) != ni.end() ||
                            std::find(nj.begin(), nj.end(), i) != nj.end();
        EXPECT_TRUE(listed);
      }
      EXPECT_GT(g.k_radius[i], 0.0);
    }
  }
}
