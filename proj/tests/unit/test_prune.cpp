#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "lstree/cd_tree.hpp"
#include "lstree/density.hpp"
#include "lstree/errors.hpp"
#include "lstree/neighbor_graph.hpp"
#include "lstree/tree_builder.hpp"
#include "oracles.hpp"
#include "tree_builders.hpp"

using namespace lstree;
using fixtures::make_tree;

namespace {

LevelSetTree random_tree(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  const auto points = oracle::random_points(rng, n, 2);
  const auto nb = knn(pairwise_distances(points), k);
  const auto f = knn_density(nb.k_radius, n, 2, k);
  return construct_tree(knn_graph(nb), construct_level_grid(f, GridMode::mass), f);
}

template <class Tree>
void expect_prune_properties(const Tree& original, std::size_t gamma) {
  const auto pruned = prune_size_merge(original, gamma);
  ASSERT_EQ(oracle::violations(pruned), "");
  for (int leaf : pruned.leaves()) {
    if (leaf != pruned.root_id()) EXPECT_GE(pruned.node(leaf).size(), gamma);
  }
  // Surviving nodes keep their id and member set; the root is untouched.
  for (const auto& [id, node] : pruned.nodes) {
    ASSERT_TRUE(original.nodes.count(id));
    EXPECT_EQ(node.members, original.node(id).members);
  }
  EXPECT_EQ(pruned.node(pruned.root_id()).members, original.node(original.root_id()).members);
  EXPECT_EQ(prune_size_merge(pruned, gamma), pruned);
}

}  // namespace

TEST(Prune, GammaZeroIsIdentity) {
  std::mt19937_64 rng(41);
  const auto tree = random_tree(rng, 60, 3);
  EXPECT_EQ(prune_size_merge(tree, 0), tree);
}

TEST(Prune, SmallLeafMergesAndSingleChildSplices) {
  const auto tree = make_tree(304, {{0, std::nullopt, {1, 2}, 1.0, 2.0, 0, 304},
                                    {1, 0, {}, 2.0, 5.0, 0, 300},
                                    {2, 0, {}, 2.0, 3.0, 300, 4}});
  const auto pruned = prune_size_merge(tree, 10);
  ASSERT_EQ(pruned.nodes.size(), 1u);
  const auto& root = pruned.node(0);
  EXPECT_EQ(root.size(), 304u);
  EXPECT_EQ(root.lambda1, 1.0);
  EXPECT_EQ(root.lambda2, 5.0);
  EXPECT_TRUE(root.is_leaf());
}

TEST(Prune, AbsorbingParentExtendsToLatestDeath) {
  const auto tree = make_tree(20, {{0, std::nullopt, {1, 2}, 1.0, 2.0, 0, 20},
                                   {1, 0, {}, 2.0, 7.0, 0, 5},
                                   {2, 0, {}, 2.0, 4.0, 5, 5}});
  const auto pruned = prune_size_merge(tree, 6);
  ASSERT_EQ(pruned.nodes.size(), 1u);
  EXPECT_EQ(pruned.node(0).lambda2, 7.0);
}

TEST(Prune, SpliceKeepsDeeperDeathAndRelinksGrandchildren) {
  const auto tree = make_tree(100, {{0, std::nullopt, {1, 2}, 1.0, 2.0, 0, 100},
                                    {1, 0, {3, 4}, 2.0, 3.0, 0, 90},
                                    {2, 0, {}, 2.0, 2.5, 90, 3},
                                    {3, 1, {}, 3.0, 9.0, 0, 40},
                                    {4, 1, {}, 3.0, 8.0, 40, 40}});
  const auto pruned = prune_size_merge(tree, 5);
  ASSERT_EQ(pruned.nodes.size(), 3u);
  const auto& root = pruned.node(0);
  EXPECT_EQ(root.children, (std::vector<int>{3, 4}));
  EXPECT_EQ(root.lambda2, 3.0);
  EXPECT_EQ(root.size(), 100u);
  EXPECT_EQ(pruned.node(3).parent, 0);
  EXPECT_EQ(pruned.node(4).parent, 0);
}

TEST(Prune, LargeLeavesAreAFixedPoint) {
  const auto tree = make_tree(20, {{0, std::nullopt, {1, 2}, 1.0, 2.0, 0, 20},
                                   {1, 0, {}, 2.0, 7.0, 0, 8},
                                   {2, 0, {}, 2.0, 4.0, 8, 9}});
  EXPECT_EQ(prune_size_merge(tree, 8), tree);
}

TEST(Prune, GammaAtLeastNIsAnError) {
  const auto tree = make_tree(20, {{0, std::nullopt, {}, 1.0, 2.0, 0, 20}});
  EXPECT_THROW(prune_size_merge(tree, 20), data_error);
  EXPECT_NO_THROW(prune_size_merge(tree, 19));
}

TEST(Prune, PropertiesOnRandomTrees) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 10, 150);
    const auto tree = random_tree(rng, n, oracle::uniform_int(rng, 1, 5));
    for (std::size_t gamma : {std::size_t{1}, std::size_t{2}, n / 10, n / 3, n - 1}) {
      expect_prune_properties(tree, gamma);
    }
  }
}

TEST(Prune, CDTreePropertiesOnRandomTrees) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 8, 40);
    const auto points = oracle::random_points(rng, n, 2);
    const auto tree = cd_tree_exact(points, oracle::uniform_int(rng, 1, 4), 1.4);
    EXPECT_EQ(prune_size_merge(tree, 0), tree);
    for (std::size_t gamma : {std::size_t{2}, n / 4, n / 2}) expect_prune_properties(tree, gamma);
  }
}
