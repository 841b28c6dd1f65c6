#include "lstree/print.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

namespace lstree {
namespace {

struct Column {
  Column(std::string h, bool is_text = false) : header(std::move(h)), text(is_text) {}

  std::string header;
  bool text = false;  // text columns get one separating space, numeric ones two
  std::vector<std::string> cells;
};

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string list(const std::vector<int>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

std::string parent(const std::optional<int>& p) { return p ? std::to_string(*p) : "None"; }

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render(const std::vector<std::string>& keys, const std::vector<Column>& columns) {
  std::size_t key_width = 3;
  for (const auto& key : keys) key_width = std::max(key_width, key.size());

  std::vector<std::size_t> widths;
  for (const auto& col : columns) {
    std::size_t w = 0;
    for (const auto& cell : col.cells) w = std::max(w, cell.size() + (col.text ? 1 : 0));
    widths.push_back(std::max(w, col.header.size()) + (col.text ? 1 : 2));
  }

  std::string header(key_width, ' ');
  for (std::size_t c = 0; c < columns.size(); ++c) header += pad_left(columns[c].header, widths[c]);
  std::string out = header + '\n';
  out += "key" + std::string(header.size() - 3, ' ') + '\n';
  for (std::size_t r = 0; r < keys.size(); ++r) {
    std::string line = keys[r] + std::string(key_width - keys[r].size(), ' ');
    for (std::size_t c = 0; c < columns.size(); ++c) line += pad_left(columns[c].cells[r], widths[c]);
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string format_tree_table(const LevelSetTree& tree) {
  std::vector<std::string> keys;
  std::vector<Column> columns{{"alpha1"}, {"alpha2"}, {"children", true}, {"lambda1"},
                              {"lambda2"}, {"parent", true}, {"size"}};
  for (const auto& [id, node] : tree.nodes) {
    keys.push_back(std::to_string(id));
    columns[0].cells.push_back(fixed(node.alpha1, 4));
    columns[1].cells.push_back(fixed(node.alpha2, 4));
    columns[2].cells.push_back(list(node.children));
    columns[3].cells.push_back(fixed(node.lambda1, 6));
    columns[4].cells.push_back(fixed(node.lambda2, 6));
    columns[5].cells.push_back(parent(node.parent));
    columns[6].cells.push_back(std::to_string(node.size()));
  }
  return render(keys, columns);
}

std::string format_tree_table(const CDTree& tree) {
  std::vector<std::string> keys;
  std::vector<Column> columns{{"children", true}, {"parent", true}, {"r1"}, {"r2"}, {"size"}};
  for (const auto& [id, node] : tree.nodes) {
    keys.push_back(std::to_string(id));
    columns[0].cells.push_back(list(node.children));
    columns[1].cells.push_back(parent(node.parent));
    columns[2].cells.push_back(fixed(node.r1, 6));
    columns[3].cells.push_back(fixed(node.r2, 6));
    columns[4].cells.push_back(std::to_string(node.size()));
  }
  return render(keys, columns);
}

}  // namespace lstree
