#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lstree/cd_tree.hpp"
#include "lstree/density.hpp"
#include "lstree/labeling.hpp"
#include "lstree/level_set_tree.hpp"
#include "lstree/pipeline.hpp"
#include "lstree/tree_builder.hpp"

namespace lstree {

enum class TreeKind { geometric, cd };

struct GeometricPayload {
  GridMode grid_mode = GridMode::mass;
  std::optional<std::size_t> n_grid;
  DensityKind density_kind = DensityKind::density;
  std::vector<double> fhat;
  LevelSetTree tree;

  bool operator==(const GeometricPayload&) const = default;
};

struct CDPayload {
  CDTree tree;

  bool operator==(const CDPayload&) const = default;
};

/// Everything needed to inspect a fitted tree without the original data.
struct TreeArtifact {
  static constexpr int current_format_version = 1;

  int format_version = current_format_version;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t gamma = 0;
  std::variant<GeometricPayload, CDPayload> payload;
  std::optional<std::vector<std::array<double, 2>>> points_2d;

  TreeKind kind() const noexcept {
    return std::holds_alternative<CDPayload>(payload) ? TreeKind::cd : TreeKind::geometric;
  }
  const GeometricPayload& geometric() const;
  const CDPayload& cd() const;

  bool operator==(const TreeArtifact&) const = default;
};

/// points may be null (distance-only input); the display projection is then omitted.
TreeArtifact make_artifact(const GeometricEstimate& estimate, const GeometricOptions& options,
                           const PointMatrix* points);
TreeArtifact make_artifact(const CDTree& tree, const CDOptions& options, const PointMatrix* points);

nlohmann::json to_json(const TreeArtifact& artifact);
TreeArtifact artifact_from_json(const nlohmann::json& doc);

/// Canonical text: sorted keys, reals with 17 significant digits, nodes in id order.
std::string serialize_artifact(const TreeArtifact& artifact);
TreeArtifact deserialize_artifact(std::string_view text);

TreeArtifact load_artifact(const std::string& path);
void save_artifact(const TreeArtifact& artifact, const std::string& path);

/// Deterministic JSON rendering used for artifacts and service responses.
/// Scalar-only arrays stay on one line; other containers are indented.
std::string canonical_json(const nlohmann::json& value);

nlohmann::json to_json(const Labeling& labeling);

std::string to_string(GridMode mode);
std::string to_string(LabelMethod method);
std::string to_string(CutScale scale);
std::string to_string(CDStart start);

}  // namespace lstree
