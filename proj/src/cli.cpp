#include "lstree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "lstree/artifact.hpp"
#include "lstree/dataset_io.hpp"
#include "lstree/errors.hpp"
#include "lstree/labeling.hpp"
#include "lstree/layout.hpp"
#include "lstree/neighbor_graph.hpp"
#include "lstree/pipeline.hpp"
#include "lstree/print.hpp"
#include "lstree/service.hpp"

namespace lstree {
namespace {

struct Source {
  std::string input;
  std::string distances;
  std::string seed_dataset;
  std::size_t n = 2000;
  std::uint64_t seed = 0;
  double ring_mass = 0.7;
  char delimiter = ',';
  bool header = false;
};

// Exactly one of points / distances is set after loading.
struct Data {
  std::optional<PointMatrix> points;
  std::optional<DistanceMatrix> distances;

  std::size_t n() const { return points ? points->rows() : distances->size(); }
  DistanceMatrix distance_matrix() const { return points ? pairwise_distances(*points) : *distances; }
};

void add_source_options(CLI::App& cmd, Source& src) {
  auto* input = cmd.add_option("--input", src.input, "CSV of observations, one row per point");
  auto* dist = cmd.add_option("--distances", src.distances, "CSV of pairwise distances");
  auto* seeded = cmd.add_option("--seed-dataset", src.seed_dataset, "Generated dataset")
                     ->check(CLI::IsMember({"gauss3", "crater"}));
  input->excludes(dist)->excludes(seeded);
  dist->excludes(seeded);
  cmd.add_option("--n", src.n, "Sample size for --seed-dataset")->capture_default_str();
  cmd.add_option("--seed", src.seed, "Random seed for --seed-dataset")->capture_default_str();
  cmd.add_option("--ring-mass", src.ring_mass, "Ring fraction for the crater dataset")
      ->capture_default_str();
  cmd.add_option("--delimiter", src.delimiter, "CSV field delimiter")->capture_default_str();
  cmd.add_flag("--header", src.header, "Skip the first CSV line");
}

std::optional<Data> load(const Source& src) {
  const CsvOptions csv{src.delimiter, src.header};
  Data data;
  if (!src.input.empty()) {
    data.points = load_points(src.input, csv);
  } else if (!src.distances.empty()) {
    data.distances = load_distance_matrix(src.distances, csv);
  } else if (src.seed_dataset == "gauss3") {
    data.points = generate_gaussian_mixture(src.n, src.seed).points;
  } else if (src.seed_dataset == "crater") {
    data.points = generate_crater(src.n, src.ring_mass, src.seed).points;
  } else {
    return std::nullopt;
  }
  return data;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw data_error("cli_service", "cannot write '" + path + "'");
  file << text;
  if (!file) throw data_error("cli_service", "failed writing '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Level set tree estimation and exploration"};
  app.name("lstree");
  app.require_subcommand(1);

  Source src;
  std::string output;
  std::string artifact_path;

  GeometricOptions geo;
  std::string grid_mode = "mass";
  std::size_t n_grid = 0;
  auto* build = app.add_subcommand("build", "Estimate a level set tree and write the artifact");
  add_source_options(*build, src);
  build->add_option("--k", geo.k, "Neighbors for density and graph")->capture_default_str();
  build->add_option("--gamma", geo.gamma, "Minimum leaf size for pruning")->capture_default_str();
  build->add_option("--grid-mode", grid_mode, "Density grid mode")
      ->check(CLI::IsMember({"mass", "levels"}))
      ->capture_default_str();
  build->add_option("--n-grid", n_grid, "Number of grid levels (default: every distinct density)");
  build->add_flag("--pseudo", geo.pseudo, "Use the pseudo-density k / (n r_k)");
  build->add_option("--output,-o", output, "Artifact path (default: stdout)");

  CDOptions cd;
  std::string start = "knn";
  auto* cd_build = app.add_subcommand("cd-build", "Estimate a Chaudhuri-Dasgupta tree");
  add_source_options(*cd_build, src);
  cd_build->add_option("--k", cd.k, "Neighbors for vertex activation")->capture_default_str();
  cd_build->add_option("--gamma", cd.gamma, "Minimum leaf size for pruning")->capture_default_str();
  cd_build->add_option("--alpha", cd.alpha, "Edge length multiplier (>= 1)")->capture_default_str();
  cd_build->add_option("--start", start, "Edge universe")
      ->check(CLI::IsMember({"exact", "knn"}))
      ->capture_default_str();
  cd_build->add_option("--output,-o", output, "Artifact path (default: stdout)");

  std::string method = "all-mode";
  std::size_t k_clusters = 0;
  double threshold = 0.0;
  std::string cut = "alpha";
  bool assign_background = false;
  std::size_t bg_k = 0;
  auto* label = app.add_subcommand("label", "Extract cluster labels from an artifact");
  label->add_option("--artifact", artifact_path, "Artifact path")->required();
  label->add_option("--method", method, "Labeling method")
      ->check(CLI::IsMember({"all-mode", "first-k", "upper-set"}))
      ->capture_default_str();
  auto* k_opt = label->add_option("--k-clusters", k_clusters, "Number of clusters for first-k");
  auto* t_opt = label->add_option("--threshold", threshold, "Cut level for upper-set");
  label->add_option("--scale", cut, "Scale of --threshold")
      ->check(CLI::IsMember({"lambda", "alpha"}))
      ->capture_default_str();
  label->add_flag("--assign-background", assign_background,
                  "Label background points by kNN vote (needs the original data)");
  label->add_option("--bg-k", bg_k, "Voters for --assign-background (default: artifact k)");
  add_source_options(*label, src);
  label->add_option("--output,-o", output, "Labels path (default: stdout)");

  auto* print = app.add_subcommand("print", "Print the node table");
  print->add_option("--artifact", artifact_path, "Artifact path")->required();

  std::string layout_scale;
  auto* layout = app.add_subcommand("layout", "Emit the dendrogram layout as JSON");
  layout->add_option("--artifact", artifact_path, "Artifact path")->required();
  layout->add_option("--scale", layout_scale, "lambda, alpha, kappa or radius");
  layout->add_option("--output,-o", output, "Layout path (default: stdout)");

  int port = 8000;
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Serve an artifact on 127.0.0.1");
  serve->add_option("--artifact", artifact_path, "Artifact path")->required();
  serve->add_option("--port", port, "TCP port (0 picks a free one)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve->add_option("--static", static_dir, "Directory with the explorer bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const auto* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return exit_usage;
  }

  try {
    if (build->parsed()) {
      const auto data = load(src);
      if (!data) throw usage_error("build needs --input, --distances or --seed-dataset");
      geo.grid_mode = grid_mode == "mass" ? GridMode::mass : GridMode::levels;
      if (build->count("--n-grid") > 0) geo.n_grid = n_grid;
      const auto artifact =
          data->points ? make_artifact(estimate_level_set_tree(*data->points, geo), geo, &*data->points)
                       : make_artifact(estimate_level_set_tree(*data->distances, geo), geo, nullptr);
      emit(serialize_artifact(artifact), output, out);
    } else if (cd_build->parsed()) {
      const auto data = load(src);
      if (!data) throw usage_error("cd-build needs --input, --distances or --seed-dataset");
      cd.start = start == "exact" ? CDStart::exact : CDStart::knn;
      const auto tree = estimate_cd_tree(data->distance_matrix(), cd);
      const PointMatrix* points = data->points ? &*data->points : nullptr;
      emit(serialize_artifact(make_artifact(tree, cd, points)), output, out);
    } else if (label->parsed()) {
      const auto artifact = load_artifact(artifact_path);
      const bool is_cd = artifact.kind() == TreeKind::cd;
      Labeling labeling;
      if (method == "all-mode") {
        labeling = is_cd ? label_all_mode(artifact.cd().tree)
                         : label_all_mode(artifact.geometric().tree);
      } else if (method == "first-k") {
        if (k_opt->count() == 0) throw usage_error("--method first-k needs --k-clusters");
        labeling = is_cd ? label_first_k(artifact.cd().tree, k_clusters)
                         : label_first_k(artifact.geometric().tree, k_clusters);
      } else {
        if (t_opt->count() == 0) throw usage_error("--method upper-set needs --threshold");
        if (is_cd) throw usage_error("upper-set labeling is not available for CD trees");
        const auto& g = artifact.geometric();
        labeling = label_upper_set(g.tree, g.fhat, threshold,
                                   cut == "alpha" ? CutScale::alpha : CutScale::lambda);
      }
      auto doc = to_json(labeling);
      doc["full_labels"] = labeling.full_labels(artifact.n);
      doc["background_assigned"] = assign_background;
      if (assign_background) {
        const auto data = load(src);
        if (!data) {
          throw usage_error("--assign-background needs --input, --distances or --seed-dataset");
        }
        if (data->n() != artifact.n) {
          throw data_error("cli_service", "data has " + std::to_string(data->n()) +
                                              " points but the artifact has " +
                                              std::to_string(artifact.n));
        }
        const std::size_t voters = bg_k > 0 ? bg_k : std::max<std::size_t>(artifact.k, 1);
        doc["full_labels"] = data->points ? assign_background_knn(*data->points, labeling, voters)
                                          : assign_background_knn(*data->distances, labeling, voters);
      }
      emit(canonical_json(doc), output, out);
    } else if (print->parsed()) {
      const auto artifact = load_artifact(artifact_path);
      out << (artifact.kind() == TreeKind::cd ? format_tree_table(artifact.cd().tree)
                                              : format_tree_table(artifact.geometric().tree));
    } else if (layout->parsed()) {
      const auto artifact = load_artifact(artifact_path);
      const bool is_cd = artifact.kind() == TreeKind::cd;
      const auto scale = parse_layout_scale(layout_scale.empty() ? (is_cd ? "radius" : "lambda")
                                                                 : layout_scale);
      const auto result = is_cd ? layout_dendrogram(artifact.cd().tree, scale)
                                : layout_dendrogram(artifact.geometric().tree, scale);
      emit(canonical_json(to_json(result)), output, out);
    } else if (serve->parsed()) {
      auto session = std::make_shared<const Session>(load_artifact(artifact_path));
      SessionServer server(session, static_dir.empty() ? std::nullopt
                                                       : std::optional<std::string>(static_dir));
      const int bound = server.bind("127.0.0.1", port);
      out << "serving http://127.0.0.1:" << bound << std::endl;
      server.run();
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const data_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_ok;
}

}  // namespace lstree
