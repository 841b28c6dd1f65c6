#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lstree/cd_tree.hpp"
#include "lstree/level_set_tree.hpp"

namespace lstree {

enum class LayoutScale { lambda, alpha, kappa, radius };

/// x values are fractions of the unit interval; y_low/y_high are the node's
/// (scale1, scale2) endpoints. On the radius scale y decreases from r1 to r2.
struct NodeLayout {
  int id = 0;
  double x_center = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_low = 0.0;
  double y_high = 0.0;
  double width = 0.0;  // size / n

  bool operator==(const NodeLayout&) const = default;
};

struct DendrogramLayout {
  LayoutScale scale = LayoutScale::lambda;
  std::vector<NodeLayout> nodes;  // ascending id

  bool operator==(const DendrogramLayout&) const = default;
};

/// Mass-proportional layout. The root spans [0, 1]; a child occupies a
/// sub-interval of width size/n, siblings run left to right by decreasing
/// size (ties by id) and the parent's uncaptured mass is split into equal
/// gaps before, between and after them.
DendrogramLayout layout_dendrogram(const LevelSetTree& tree, LayoutScale scale);

/// CD trees only carry the radius scale.
DendrogramLayout layout_dendrogram(const CDTree& tree, LayoutScale scale);

LayoutScale parse_layout_scale(const std::string& name);
std::string to_string(LayoutScale scale);

nlohmann::json to_json(const DendrogramLayout& layout);

}  // namespace lstree
