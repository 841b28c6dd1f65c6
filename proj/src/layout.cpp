#include "lstree/layout.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lstree/errors.hpp"

namespace lstree {
namespace {

constexpr const char* kModule = "cli_service";

template <class Tree, class YSpan>
DendrogramLayout layout(const Tree& tree, LayoutScale scale, YSpan y_span) {
  DendrogramLayout out;
  out.scale = scale;
  const double n = static_cast<double>(tree.n);
  std::map<int, NodeLayout> placed;

  const int root = tree.root_id();
  std::vector<std::pair<int, std::pair<double, double>>> stack{{root, {0.0, 1.0}}};
  while (!stack.empty()) {
    const auto [id, interval] = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes.at(id);
    NodeLayout& slot = placed[id];
    slot.id = id;
    slot.x_lo = interval.first;
    slot.x_hi = interval.second;
    slot.x_center = 0.5 * (interval.first + interval.second);
    slot.width = static_cast<double>(node.size()) / n;
    std::tie(slot.y_low, slot.y_high) = y_span(node);

    std::vector<int> kids = node.children;
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      const auto sa = tree.nodes.at(a).size();
      const auto sb = tree.nodes.at(b).size();
      return sa != sb ? sa > sb : a < b;
    });
    double captured = 0.0;
    for (int c : kids) captured += static_cast<double>(tree.nodes.at(c).size()) / n;
    const double span = interval.second - interval.first;
    const double gap = std::max(0.0, span - captured) / static_cast<double>(kids.size() + 1);
    double cursor = interval.first;
    for (int c : kids) {
      const double w = static_cast<double>(tree.nodes.at(c).size()) / n;
      cursor += gap;
      stack.push_back({c, {cursor, cursor + w}});
      cursor += w;
    }
  }
  for (auto& [id, slot] : placed) out.nodes.push_back(slot);
  return out;
}

}  // namespace

DendrogramLayout layout_dendrogram(const LevelSetTree& tree, LayoutScale scale) {
  switch (scale) {
    case LayoutScale::lambda:
      return layout(tree, scale, [](const TreeNode& v) { return std::pair(v.lambda1, v.lambda2); });
    case LayoutScale::alpha:
      return layout(tree, scale, [](const TreeNode& v) { return std::pair(v.alpha1, v.alpha2); });
    case LayoutScale::kappa:
      if (!tree.has_kappa) throw data_error(kModule, "kappa scale is not populated on this tree");
      return layout(tree, scale, [](const TreeNode& v) { return std::pair(v.kappa1, v.kappa2); });
    case LayoutScale::radius:
      break;
  }
  throw data_error(kModule, "radius scale is only available for CD trees");
}

DendrogramLayout layout_dendrogram(const CDTree& tree, LayoutScale scale) {
  if (scale != LayoutScale::radius) {
    throw data_error(kModule, "CD trees only carry the radius scale, not " + to_string(scale));
  }
  return layout(tree, scale, [](const CDNode& v) { return std::pair(v.r1, v.r2); });
}

LayoutScale parse_layout_scale(const std::string& name) {
  if (name == "lambda") return LayoutScale::lambda;
  if (name == "alpha") return LayoutScale::alpha;
  if (name == "kappa") return LayoutScale::kappa;
  if (name == "radius") return LayoutScale::radius;
  throw usage_error("unknown scale '" + name + "' (expected lambda, alpha, kappa or radius)");
}

std::string to_string(LayoutScale scale) {
  switch (scale) {
    case LayoutScale::lambda: return "lambda";
    case LayoutScale::alpha: return "alpha";
    case LayoutScale::kappa: return "kappa";
    case LayoutScale::radius: return "radius";
  }
  return "lambda";
}

nlohmann::json to_json(const DendrogramLayout& layout) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& v : layout.nodes) {
    nodes.push_back({{"id", v.id},
                     {"x_center", v.x_center},
                     {"x_interval", {v.x_lo, v.x_hi}},
                     {"y_low", v.y_low},
                     {"y_high", v.y_high},
                     {"width", v.width}});
  }
  return {{"scale", to_string(layout.scale)}, {"nodes", std::move(nodes)}};
}

}  // namespace lstree
