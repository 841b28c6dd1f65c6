#include "lstree/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "lstree/errors.hpp"
#include "lstree/scales.hpp"

namespace lstree {
namespace {

constexpr const char* kModule = "labeling";

// Builds a Labeling from (node id, member list) clusters given in label order.
template <class Clusters>
Labeling from_clusters(const Clusters& clusters, LabelMethod method, LabelParams params) {
  Labeling out;
  out.method = method;
  out.params = params;
  for (const auto& [node_id, members] : clusters) {
    const int label = static_cast<int>(out.cluster_nodes.size());
    out.cluster_nodes.push_back(node_id);
    for (index_t i : members) out.assignments.emplace_back(i, label);
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  for (std::size_t i = 1; i < out.assignments.size(); ++i) {
    if (out.assignments[i].first == out.assignments[i - 1].first) {
      throw data_error(kModule, "clusters overlap at point " +
                                    std::to_string(out.assignments[i].first));
    }
  }
  return out;
}

template <class Tree>
Labeling all_mode(const Tree& tree) {
  std::vector<std::pair<int, std::vector<index_t>>> clusters;
  for (int id : tree.leaves()) clusters.emplace_back(id, tree.nodes.at(id).members);
  return from_clusters(clusters, LabelMethod::all_mode, {});
}

// split_key(node) orders split events from low to high density.
template <class Tree, class SplitKey>
Labeling first_k(const Tree& tree, std::size_t k_clusters, SplitKey split_key) {
  if (k_clusters < 1) throw data_error(kModule, "K must be >= 1");
  const std::size_t leaves = tree.leaves().size();
  if (k_clusters > leaves) {
    throw data_error(kModule, "K = " + std::to_string(k_clusters) +
                                  " exceeds the number of leaves; at most " +
                                  std::to_string(leaves) + " clusters are achievable");
  }
  std::vector<int> splits;
  for (const auto& [id, node] : tree.nodes) {
    if (!node.children.empty()) splits.push_back(id);
  }
  std::sort(splits.begin(), splits.end(), [&](int a, int b) {
    return std::tuple(split_key(tree.nodes.at(a)), a) < std::tuple(split_key(tree.nodes.at(b)), b);
  });

  std::vector<int> active{tree.root_id()};
  for (int s : splits) {
    if (active.size() >= k_clusters) break;
    const auto it = std::find(active.begin(), active.end(), s);
    if (it == active.end()) continue;  // unreachable for well-formed trees
    active.erase(it);
    const auto& kids = tree.nodes.at(s).children;
    active.insert(active.end(), kids.begin(), kids.end());
  }
  std::sort(active.begin(), active.end());
  std::vector<std::pair<int, std::vector<index_t>>> clusters;
  for (int id : active) clusters.emplace_back(id, tree.nodes.at(id).members);
  LabelParams params;
  params.k_clusters = k_clusters;
  return from_clusters(clusters, LabelMethod::first_k, params);
}

template <class Distance>
std::vector<int> assign_background(std::size_t n, const Labeling& labeling, std::size_t k,
                                   Distance distance) {
  if (labeling.assignments.empty()) {
    throw data_error(kModule, "no foreground points to classify background points with");
  }
  if (k < 1) throw data_error(kModule, "k must be >= 1");
  if (labeling.assignments.back().first >= n) {
    throw data_error(kModule, "labeling refers to points outside the data");
  }
  std::vector<int> labels = labeling.full_labels(n);
  const auto& foreground = labeling.assignments;
  const std::size_t voters = std::min(k, foreground.size());
  const std::size_t n_labels = labeling.cluster_nodes.size();

  std::vector<std::pair<double, std::size_t>> candidates;  // (distance, foreground slot)
  std::vector<std::size_t> votes(n_labels);
  std::vector<std::size_t> first_rank(n_labels);
  std::vector<int> result = labels;
  for (std::size_t b = 0; b < n; ++b) {
    if (labels[b] != -1) continue;
    candidates.clear();
    for (std::size_t f = 0; f < foreground.size(); ++f) {
      candidates.emplace_back(distance(b, foreground[f].first), f);
    }
    // foreground is sorted by point index, so slot order breaks distance ties by index
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(voters),
                      candidates.end());
    std::fill(votes.begin(), votes.end(), 0);
    std::fill(first_rank.begin(), first_rank.end(), voters);
    for (std::size_t r = 0; r < voters; ++r) {
      const auto label = static_cast<std::size_t>(foreground[candidates[r].second].second);
      ++votes[label];
      first_rank[label] = std::min(first_rank[label], r);
    }
    std::size_t best = 0;
    for (std::size_t l = 1; l < n_labels; ++l) {
      if (votes[l] > votes[best] || (votes[l] == votes[best] && first_rank[l] < first_rank[best])) {
        best = l;
      }
    }
    result[b] = static_cast<int>(best);
  }
  return result;
}

}  // namespace

std::vector<int> Labeling::full_labels(std::size_t n) const {
  std::vector<int> out(n, -1);
  for (const auto& [i, label] : assignments) {
    if (i >= n) throw data_error(kModule, "labeling refers to points outside the data");
    out[i] = label;
  }
  return out;
}

Labeling label_all_mode(const LevelSetTree& tree) { return all_mode(tree); }
Labeling label_all_mode(const CDTree& tree) { return all_mode(tree); }

Labeling label_first_k(const LevelSetTree& tree, std::size_t k_clusters) {
  return first_k(tree, k_clusters, [](const TreeNode& node) { return node.lambda2; });
}

Labeling label_first_k(const CDTree& tree, std::size_t k_clusters) {
  return first_k(tree, k_clusters, [](const CDNode& node) { return -node.r2; });
}

Labeling label_upper_set(const LevelSetTree& tree, std::span<const double> fhat, double threshold,
                         CutScale scale) {
  if (fhat.size() != tree.n) throw data_error(kModule, "density vector does not match the tree");
  const double max_density = tree.sorted_density.back();
  double cut = threshold;
  if (scale == CutScale::alpha) {
    if (!(threshold >= 0.0 && threshold < 1.0)) {
      throw data_error(kModule, "alpha threshold must lie in [0, 1)");
    }
    cut = lambda_of_alpha(tree, threshold);
  } else if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw data_error(kModule, "lambda threshold must be a nonnegative density");
  }
  if (cut > max_density) {
    throw data_error(kModule, "cut level " + std::to_string(cut) +
                                  " is above max density; the upper level set is empty");
  }

  std::vector<std::pair<int, std::vector<index_t>>> clusters;
  for (const auto& [id, node] : tree.nodes) {
    if (!(node.lambda1 <= cut && cut < node.lambda2)) continue;
    std::vector<index_t> kept;
    for (index_t i : node.members) {
      if (fhat[i] >= cut) kept.push_back(i);
    }
    if (!kept.empty()) clusters.emplace_back(id, std::move(kept));
  }
  if (clusters.empty()) throw data_error(kModule, "no tree node is active at the cut level");
  LabelParams params;
  params.threshold = threshold;
  params.scale = scale;
  return from_clusters(clusters, LabelMethod::upper_set, params);
}

std::vector<int> assign_background_knn(const PointMatrix& points, const Labeling& labeling,
                                       std::size_t k) {
  return assign_background(points.rows(), labeling, k, [&](std::size_t a, std::size_t b) {
    double sum = 0.0;
    for (std::size_t c = 0; c < points.cols(); ++c) {
      const double diff = points(a, c) - points(b, c);
      sum += diff * diff;
    }
    return std::sqrt(sum);
  });
}

std::vector<int> assign_background_knn(const DistanceMatrix& distances, const Labeling& labeling,
                                       std::size_t k) {
  return assign_background(distances.size(), labeling, k,
                           [&](std::size_t a, std::size_t b) { return distances(a, b); });
}

}  // namespace lstree
