#pragma once

#include <string>

#include "lstree/cd_tree.hpp"
#include "lstree/level_set_tree.hpp"

namespace lstree {

/// Fixed-width node summary, one row per node in id order:
///      alpha1  alpha2  children   lambda1   lambda2 parent  size
/// key
/// 0    0.0000  0.0040    [1, 2]  0.000000  0.000003   None  5000
std::string format_tree_table(const LevelSetTree& tree);

/// Columns "children parent r1 r2 size".
std::string format_tree_table(const CDTree& tree);

}  // namespace lstree
