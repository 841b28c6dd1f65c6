#include "lstree/artifact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lstree/errors.hpp"

namespace lstree {
namespace {

using nlohmann::json;

constexpr const char* kModule = "cli_service";

bool is_scalar_array(const json& value) {
  return std::all_of(value.begin(), value.end(),
                     [](const json& item) { return !item.is_structured(); });
}

void render(const json& value, int depth, std::string& out) {
  switch (value.type()) {
    case json::value_t::null:
      out += "null";
      return;
    case json::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(value.get<std::int64_t>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(value.get<std::uint64_t>());
      return;
    case json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) throw data_error(kModule, "cannot serialize a non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    case json::value_t::string:
      out += value.dump();
      return;
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      if (is_scalar_array(value)) {
        out += '[';
        bool first = true;
        for (const auto& item : value) {
          if (!first) out += ',';
          first = false;
          render(item, depth + 1, out);
        }
        out += ']';
        return;
      }
      const std::string pad(static_cast<std::size_t>(depth + 1), ' ');
      out += "[\n";
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        render(item, depth + 1, out);
      }
      out += '\n' + std::string(static_cast<std::size_t>(depth), ' ') + ']';
      return;
    }
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      // nlohmann::json keeps object keys in a std::map, so iteration is sorted
      const std::string pad(static_cast<std::size_t>(depth + 1), ' ');
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        render(item, depth + 1, out);
      }
      out += '\n' + std::string(static_cast<std::size_t>(depth), ' ') + '}';
      return;
    }
    default:
      throw data_error(kModule, "unsupported JSON value");
  }
}

json parent_json(const std::optional<int>& parent) {
  return parent ? json(*parent) : json(nullptr);
}

json node_json(const TreeNode& node) {
  return {{"id", node.id},           {"parent", parent_json(node.parent)},
          {"children", node.children}, {"lambda1", node.lambda1},
          {"lambda2", node.lambda2}, {"alpha1", node.alpha1},
          {"alpha2", node.alpha2},   {"kappa1", node.kappa1},
          {"kappa2", node.kappa2},   {"size", node.size()},
          {"members", node.members}};
}

json node_json(const CDNode& node) {
  return {{"id", node.id},         {"parent", parent_json(node.parent)},
          {"children", node.children}, {"r1", node.r1},
          {"r2", node.r2},         {"size", node.size()},
          {"members", node.members}};
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw data_error(kModule, std::string("artifact is missing '") + key + "'");
  return *it;
}

template <class T>
T get(const json& doc, const char* key) {
  try {
    return field(doc, key).get<T>();
  } catch (const json::exception& e) {
    throw data_error(kModule, std::string("artifact field '") + key + "' has the wrong type");
  }
}

std::optional<int> parse_parent(const json& doc) {
  const auto& value = field(doc, "parent");
  if (value.is_null()) return std::nullopt;
  return get<int>(doc, "parent");
}

template <class Node>
void read_common(const json& doc, Node& node, std::size_t n) {
  node.id = get<int>(doc, "id");
  node.parent = parse_parent(doc);
  node.children = get<std::vector<int>>(doc, "children");
  node.members = get<std::vector<index_t>>(doc, "members");
  if (get<std::size_t>(doc, "size") != node.members.size()) {
    throw data_error(kModule, "node " + std::to_string(node.id) + " size does not match members");
  }
  for (index_t i : node.members) {
    if (i >= n) throw data_error(kModule, "node " + std::to_string(node.id) + " member out of range");
  }
}

template <class Node>
std::map<int, Node> read_nodes(const json& doc, std::size_t n,
                               void (*read_scales)(const json&, Node&)) {
  std::map<int, Node> nodes;
  const auto& list = field(doc, "nodes");
  if (!list.is_array() || list.empty()) throw data_error(kModule, "artifact has no nodes");
  for (const auto& item : list) {
    Node node;
    read_common(item, node, n);
    read_scales(item, node);
    const int id = node.id;
    if (!nodes.emplace(id, std::move(node)).second) {
      throw data_error(kModule, "duplicate node id " + std::to_string(id));
    }
  }
  int roots = 0;
  for (const auto& [id, node] : nodes) {
    if (!node.parent) {
      ++roots;
    } else {
      const auto parent = nodes.find(*node.parent);
      if (parent == nodes.end() ||
          std::find(parent->second.children.begin(), parent->second.children.end(), id) ==
              parent->second.children.end()) {
        throw data_error(kModule, "node " + std::to_string(id) + " has an inconsistent parent");
      }
    }
    for (int child : node.children) {
      const auto it = nodes.find(child);
      if (it == nodes.end() || it->second.parent != id) {
        throw data_error(kModule, "node " + std::to_string(id) + " has an inconsistent child");
      }
    }
  }
  if (roots != 1) throw data_error(kModule, "artifact tree must have exactly one root");
  return nodes;
}

void read_level_scales(const json& doc, TreeNode& node) {
  node.lambda1 = get<double>(doc, "lambda1");
  node.lambda2 = get<double>(doc, "lambda2");
  node.alpha1 = get<double>(doc, "alpha1");
  node.alpha2 = get<double>(doc, "alpha2");
  node.kappa1 = get<double>(doc, "kappa1");
  node.kappa2 = get<double>(doc, "kappa2");
}

void read_radius_scales(const json& doc, CDNode& node) {
  node.r1 = get<double>(doc, "r1");
  node.r2 = get<double>(doc, "r2");
}

GridMode parse_grid_mode(const std::string& s) {
  if (s == "mass") return GridMode::mass;
  if (s == "levels") return GridMode::levels;
  throw data_error(kModule, "unknown grid mode '" + s + "'");
}

CDStart parse_start(const std::string& s) {
  if (s == "exact") return CDStart::exact;
  if (s == "knn") return CDStart::knn;
  throw data_error(kModule, "unknown CD start '" + s + "'");
}

std::optional<std::vector<std::array<double, 2>>> project(const PointMatrix* points,
                                                          std::span<const double> second) {
  if (points == nullptr) return std::nullopt;
  std::vector<std::array<double, 2>> out(points->rows());
  for (std::size_t i = 0; i < points->rows(); ++i) {
    out[i] = {(*points)(i, 0), points->cols() >= 2 ? (*points)(i, 1) : second[i]};
  }
  return out;
}

}  // namespace

const GeometricPayload& TreeArtifact::geometric() const {
  if (const auto* p = std::get_if<GeometricPayload>(&payload)) return *p;
  throw data_error(kModule, "artifact holds a CD tree, not a level set tree");
}

const CDPayload& TreeArtifact::cd() const {
  if (const auto* p = std::get_if<CDPayload>(&payload)) return *p;
  throw data_error(kModule, "artifact holds a level set tree, not a CD tree");
}

std::string to_string(GridMode mode) { return mode == GridMode::mass ? "mass" : "levels"; }

std::string to_string(LabelMethod method) {
  switch (method) {
    case LabelMethod::first_k: return "first-k";
    case LabelMethod::upper_set: return "upper-set";
    case LabelMethod::all_mode: return "all-mode";
  }
  return "all-mode";
}

std::string to_string(CutScale scale) { return scale == CutScale::lambda ? "lambda" : "alpha"; }

std::string to_string(CDStart start) { return start == CDStart::exact ? "exact" : "knn"; }

TreeArtifact make_artifact(const GeometricEstimate& estimate, const GeometricOptions& options,
                           const PointMatrix* points) {
  TreeArtifact out;
  out.n = estimate.tree.n;
  out.k = options.k;
  out.gamma = options.gamma;
  GeometricPayload payload;
  payload.grid_mode = options.grid_mode;
  payload.n_grid = options.n_grid;
  payload.density_kind = estimate.fhat.kind;
  payload.fhat = estimate.fhat.values;
  payload.tree = estimate.tree;
  out.points_2d = project(points, payload.fhat);
  out.payload = std::move(payload);
  return out;
}

TreeArtifact make_artifact(const CDTree& tree, const CDOptions& options, const PointMatrix* points) {
  TreeArtifact out;
  out.n = tree.n;
  out.k = options.k;
  out.gamma = options.gamma;
  out.points_2d = project(points, tree.k_radius);
  out.payload = CDPayload{tree};
  return out;
}

json to_json(const TreeArtifact& artifact) {
  json doc;
  doc["format_version"] = artifact.format_version;
  doc["n"] = artifact.n;
  doc["k"] = artifact.k;
  doc["gamma"] = artifact.gamma;
  json nodes = json::array();
  if (const auto* g = std::get_if<GeometricPayload>(&artifact.payload)) {
    doc["tree_kind"] = "geometric";
    doc["grid"] = {{"mode", to_string(g->grid_mode)},
                   {"n_grid", g->n_grid ? json(*g->n_grid) : json(nullptr)}};
    doc["density_kind"] = g->density_kind == DensityKind::density ? "density" : "pseudo";
    doc["fhat"] = g->fhat;
    doc["has_kappa"] = g->tree.has_kappa;
    for (const auto& [id, node] : g->tree.nodes) nodes.push_back(node_json(node));
  } else {
    const auto& tree = artifact.cd().tree;
    doc["tree_kind"] = "cd";
    doc["cd"] = {{"alpha", tree.alpha}, {"start", to_string(tree.start)}};
    doc["k_radius"] = tree.k_radius;
    for (const auto& [id, node] : tree.nodes) nodes.push_back(node_json(node));
  }
  doc["nodes"] = std::move(nodes);
  if (artifact.points_2d) doc["points_2d"] = *artifact.points_2d;
  return doc;
}

TreeArtifact artifact_from_json(const json& doc) {
  if (!doc.is_object()) throw data_error(kModule, "artifact must be a JSON object");
  TreeArtifact out;
  out.format_version = get<int>(doc, "format_version");
  if (out.format_version != TreeArtifact::current_format_version) {
    throw data_error(kModule, "unsupported format_version " + std::to_string(out.format_version));
  }
  out.n = get<std::size_t>(doc, "n");
  out.k = get<std::size_t>(doc, "k");
  out.gamma = get<std::size_t>(doc, "gamma");
  if (out.n < 2) throw data_error(kModule, "artifact needs n >= 2");

  const auto kind = get<std::string>(doc, "tree_kind");
  if (kind == "geometric") {
    GeometricPayload g;
    const auto& grid = field(doc, "grid");
    g.grid_mode = parse_grid_mode(get<std::string>(grid, "mode"));
    if (!field(grid, "n_grid").is_null()) g.n_grid = get<std::size_t>(grid, "n_grid");
    const auto density_kind = get<std::string>(doc, "density_kind");
    if (density_kind != "density" && density_kind != "pseudo") {
      throw data_error(kModule, "unknown density kind '" + density_kind + "'");
    }
    g.density_kind = density_kind == "density" ? DensityKind::density : DensityKind::pseudo;
    g.fhat = get<std::vector<double>>(doc, "fhat");
    if (g.fhat.size() != out.n) throw data_error(kModule, "fhat length does not match n");
    g.tree.n = out.n;
    g.tree.has_kappa = get<bool>(doc, "has_kappa");
    g.tree.sorted_density = g.fhat;
    std::sort(g.tree.sorted_density.begin(), g.tree.sorted_density.end());
    g.tree.nodes = read_nodes<TreeNode>(doc, out.n, read_level_scales);
    out.payload = std::move(g);
  } else if (kind == "cd") {
    CDPayload c;
    const auto& cd = field(doc, "cd");
    c.tree.n = out.n;
    c.tree.k = out.k;
    c.tree.alpha = get<double>(cd, "alpha");
    c.tree.start = parse_start(get<std::string>(cd, "start"));
    c.tree.k_radius = get<std::vector<double>>(doc, "k_radius");
    if (c.tree.k_radius.size() != out.n) throw data_error(kModule, "k_radius length does not match n");
    c.tree.nodes = read_nodes<CDNode>(doc, out.n, read_radius_scales);
    out.payload = std::move(c);
  } else {
    throw data_error(kModule, "unknown tree_kind '" + kind + "'");
  }

  if (doc.contains("points_2d")) {
    out.points_2d = get<std::vector<std::array<double, 2>>>(doc, "points_2d");
    if (out.points_2d->size() != out.n) throw data_error(kModule, "points_2d length does not match n");
  }
  return out;
}

std::string canonical_json(const json& value) {
  std::string out;
  render(value, 0, out);
  out += '\n';
  return out;
}

std::string serialize_artifact(const TreeArtifact& artifact) {
  return canonical_json(to_json(artifact));
}

TreeArtifact deserialize_artifact(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw data_error(kModule, std::string("artifact is not valid JSON: ") + e.what());
  }
  return artifact_from_json(doc);
}

TreeArtifact load_artifact(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error(kModule, "cannot open artifact '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return deserialize_artifact(buffer.str());
}

void save_artifact(const TreeArtifact& artifact, const std::string& path) {
  const std::string text = serialize_artifact(artifact);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error(kModule, "cannot write artifact '" + path + "'");
  out << text;
  if (!out) throw data_error(kModule, "failed writing artifact '" + path + "'");
}

json to_json(const Labeling& labeling) {
  json doc;
  doc["method"] = to_string(labeling.method);
  json params = json::object();
  if (labeling.params.k_clusters) params["k_clusters"] = *labeling.params.k_clusters;
  if (labeling.params.threshold) params["threshold"] = *labeling.params.threshold;
  if (labeling.params.scale) params["scale"] = to_string(*labeling.params.scale);
  doc["params"] = std::move(params);
  doc["n_clusters"] = labeling.cluster_nodes.size();
  doc["cluster_nodes"] = labeling.cluster_nodes;
  json points = json::array();
  json labels = json::array();
  for (const auto& [i, label] : labeling.assignments) {
    points.push_back(i);
    labels.push_back(label);
  }
  doc["points"] = std::move(points);
  doc["labels"] = std::move(labels);
  return doc;
}

}  // namespace lstree
