#include "lstree/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "lstree/errors.hpp"

namespace lstree {
namespace {

struct ParsedCsv {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

ParsedCsv parse_csv(const std::filesystem::path& path, CsvOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw data_error("dataset_io", "cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  ParsedCsv out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && options.skip_header) continue;
    if (trim(line).empty()) continue;

    std::size_t cols = 0;
    std::size_t field_start = 0;
    while (true) {
      const auto delim = line.find(options.delimiter, field_start);
      const auto field = trim(line.substr(field_start, delim == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : delim - field_start));
      double value = 0.0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      // from_chars rejects a leading '+', which plain CSV writers sometimes emit.
      if (first != last && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (field.empty() || ec != std::errc() || ptr != last) {
        throw data_error("dataset_io", "parse error at line " + std::to_string(line_no) +
                                           ": '" + std::string(field) + "' is not a number");
      }
      if (!std::isfinite(value)) {
        throw data_error("dataset_io", "non-finite value at line " + std::to_string(line_no));
      }
      out.values.push_back(value);
      ++cols;
      if (delim == std::string_view::npos) break;
      field_start = delim + 1;
    }
    if (out.rows == 0) {
      out.cols = cols;
    } else if (cols != out.cols) {
      throw data_error("dataset_io", "ragged row at line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(out.cols) + " fields, found " +
                                         std::to_string(cols));
    }
    ++out.rows;
  }
  return out;
}

}  // namespace

PointMatrix load_points(const std::filesystem::path& path, CsvOptions options) {
  auto csv = parse_csv(path, options);
  if (csv.rows < 2) {
    throw data_error("dataset_io", "need at least 2 observations (n >= 2), found " +
                                       std::to_string(csv.rows));
  }
  return PointMatrix(csv.rows, csv.cols, std::move(csv.values));
}

DistanceMatrix load_distance_matrix(const std::filesystem::path& path, CsvOptions options) {
  auto csv = parse_csv(path, options);
  if (csv.rows != csv.cols) {
    throw data_error("dataset_io", "distance matrix must be square, got " + std::to_string(csv.rows) +
                                       "x" + std::to_string(csv.cols));
  }
  if (csv.rows < 2) {
    throw data_error("dataset_io", "distance matrix needs at least 2 observations");
  }
  return DistanceMatrix(csv.rows, std::move(csv.values));
}

LabeledSample generate_gaussian_mixture(std::size_t n, std::uint64_t seed) {
  if (n < 3) {
    throw data_error("dataset_io", "gaussian mixture needs n >= 3");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, presets::gauss3_sigma);
  std::vector<double> values(n * 2);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<int>(i % 3);
    labels[i] = c;
    values[2 * i] = presets::gauss3_centers[c][0] + noise(rng);
    values[2 * i + 1] = presets::gauss3_centers[c][1] + noise(rng);
  }
  return {PointMatrix(n, 2, std::move(values)), std::move(labels)};
}

LabeledSample generate_crater(std::size_t n, double ring_mass, std::uint64_t seed) {
  if (n < 2) {
    throw data_error("dataset_io", "crater needs n >= 2");
  }
  if (!(ring_mass > 0.0 && ring_mass < 1.0)) {
    throw data_error("dataset_io", "ring_mass must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution in_ring(ring_mass);
  std::normal_distribution<double> core(0.0, presets::crater_core_sigma);
  std::normal_distribution<double> radial(presets::crater_ring_radius, presets::crater_ring_sigma);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> values(n * 2);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (in_ring(rng)) {
      labels[i] = 1;
      const double r = radial(rng);
      const double theta = angle(rng);
      values[2 * i] = r * std::cos(theta);
      values[2 * i + 1] = r * std::sin(theta);
    } else {
      labels[i] = 0;
      values[2 * i] = core(rng);
      values[2 * i + 1] = core(rng);
    }
  }
  return {PointMatrix(n, 2, std::move(values)), std::move(labels)};
}

}  // namespace lstree
