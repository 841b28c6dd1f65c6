#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "lstree/matrix.hpp"

namespace fixtures {

inline lstree::PointMatrix line(std::initializer_list<double> xs) {
  return lstree::PointMatrix(xs.size(), 1, std::vector<double>(xs));
}

/// {0, 0.1, 0.2, 10, 10.1, 10.2}: two triples that never share 2-NN edges.
inline lstree::PointMatrix two_triangles() { return line({0, 0.1, 0.2, 10, 10.1, 10.2}); }

/// Scratch file removed when the test ends.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const std::string& suffix = ".csv") {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("lstree_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
    std::ofstream(path_, std::ios::binary) << contents;
  }
  TempFile() : TempFile("") {}
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace fixtures
