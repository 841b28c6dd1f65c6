#include "lstree/scales.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lstree/errors.hpp"

namespace lstree {

double alpha_of_lambda(const LevelSetTree& tree, double lambda) {
  const auto& sorted = tree.sorted_density;
  if (sorted.empty()) throw data_error("scales", "tree carries no density values");
  const auto below = std::lower_bound(sorted.begin(), sorted.end(), lambda) - sorted.begin();
  return static_cast<double>(below) / static_cast<double>(sorted.size());
}

double lambda_of_alpha(const LevelSetTree& tree, double alpha) {
  const auto& sorted = tree.sorted_density;
  if (sorted.empty()) throw data_error("scales", "tree carries no density values");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw data_error("scales", "alpha must lie in [0, 1]");
  const auto n = static_cast<double>(sorted.size());
  // count/n * n can land one ulp above count; the guard keeps the round trip exact.
  const double removed = std::ceil(alpha * n - 1e-9);
  const auto index = std::min(static_cast<std::size_t>(std::max(removed, 0.0)), sorted.size() - 1);
  return sorted[index];
}

LevelSetTree compute_kappa(const LevelSetTree& tree) {
  LevelSetTree out = tree;
  const auto n = static_cast<std::int64_t>(tree.n);
  // Integer numerators of k' and k'' over n, pushed from each parent to its children.
  std::vector<std::pair<int, std::int64_t>> stack{{out.root_id(), n}};
  while (!stack.empty()) {
    const auto [id, upper] = stack.back();
    stack.pop_back();
    auto& node = out.nodes.at(id);
    std::int64_t kids = 0;
    for (int c : node.children) kids += static_cast<std::int64_t>(out.nodes.at(c).size());
    const std::int64_t lower = upper - static_cast<std::int64_t>(node.size()) + kids;
    node.kappa1 = static_cast<double>(n - upper) / static_cast<double>(n);
    node.kappa2 = static_cast<double>(n - lower) / static_cast<double>(n);
    for (int c : node.children) stack.emplace_back(c, lower);
  }
  out.has_kappa = true;
  return out;
}

}  // namespace lstree
