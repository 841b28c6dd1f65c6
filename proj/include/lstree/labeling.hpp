#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lstree/cd_tree.hpp"
#include "lstree/level_set_tree.hpp"
#include "lstree/matrix.hpp"

namespace lstree {

enum class LabelMethod { first_k, upper_set, all_mode };
enum class CutScale { lambda, alpha };

struct LabelParams {
  std::optional<std::size_t> k_clusters;
  std::optional<double> threshold;
  std::optional<CutScale> scale;

  bool operator==(const LabelParams&) const = default;
};

/// Foreground labels. assignments are (point index, label) sorted by point;
/// label c belongs to tree node cluster_nodes[c]. Unlisted points are background.
struct Labeling {
  std::vector<std::pair<index_t, int>> assignments;
  std::vector<int> cluster_nodes;
  LabelMethod method = LabelMethod::all_mode;
  LabelParams params;

  /// Dense vector of length n with -1 for background points.
  std::vector<int> full_labels(std::size_t n) const;

  bool operator==(const Labeling&) const = default;
};

/// One cluster per leaf, labels in ascending node id order.
Labeling label_all_mode(const LevelSetTree& tree);
Labeling label_all_mode(const CDTree& tree);

/// Consumes splits in density order (ascending lambda2, ties by id; for CD
/// trees descending r2) until at least K clusters are active. Multiway splits
/// can overshoot K.
Labeling label_first_k(const LevelSetTree& tree, std::size_t k_clusters);
Labeling label_first_k(const CDTree& tree, std::size_t k_clusters);

/// Clusters are the nodes active at the cut level, restricted to members with
/// f̂ >= cut. On the alpha scale the cut is the threshold-quantile of f̂.
Labeling label_upper_set(const LevelSetTree& tree, std::span<const double> fhat, double threshold,
                         CutScale scale);

/// Majority vote of the k nearest foreground points for every background point;
/// a tie goes to the tied label whose closest voter is nearest. Foreground labels
/// are kept. Returns a label for all n points.
std::vector<int> assign_background_knn(const PointMatrix& points, const Labeling& labeling,
                                       std::size_t k);
std::vector<int> assign_background_knn(const DistanceMatrix& distances, const Labeling& labeling,
                                       std::size_t k);

}  // namespace lstree
