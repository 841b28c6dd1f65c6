#pragma once

#include "lstree/level_set_tree.hpp"

namespace lstree {

/// Fraction of observations with f̂ strictly below lambda.
double alpha_of_lambda(const LevelSetTree& tree, double lambda);

/// Empirical alpha-quantile of f̂: sorted_density[min(ceil(alpha * n), n - 1)],
/// so cutting there removes ceil(alpha * n) observations when densities are
/// distinct. For every observed density v, lambda_of_alpha(alpha_of_lambda(v)) == v.
double lambda_of_alpha(const LevelSetTree& tree, double alpha);

/// Salient-mass (kappa) scale. With m_i = size_i / n:
///   k'_root = 1,  k'_i = k''_parent,  k''_i = k'_i - m_i + sum over children of m_j,
/// stored as kappa1 = 1 - k'_i and kappa2 = 1 - k''_i. Evaluated on integer
/// counts, so every value is an exact count / n. Topology is unchanged.
LevelSetTree compute_kappa(const LevelSetTree& tree);

}  // namespace lstree
