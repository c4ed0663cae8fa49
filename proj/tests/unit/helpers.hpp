#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gam/catalog.hpp"
#include "gam/corpus.hpp"

namespace testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / ("gam_test_" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::filesystem::path data_dir() { return GAM_TEST_DATA_DIR; }

/// A set whose ordinal features are all `ordinal` and tags all `tag`.
inline gam::AnnotationSet uniform_set(int id, std::size_t rows, int ordinal, gam::Cell tag) {
  std::vector<std::string> ids;
  for (std::size_t r = 0; r < rows; ++r) ids.push_back("s" + std::to_string(r + 1));
  gam::AnnotationSet s(id, ids);
  const auto& cat = gam::FeatureCatalog::standard();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t f = 0; f < cat.size(); ++f) {
      s.set(r, f, cat.features()[f].binary() ? tag : gam::Cell(ordinal));
    }
  }
  return s;
}

/// CSV header with every catalog feature, in catalog order.
inline std::string catalog_header() {
  std::string h;
  for (const auto& f : gam::FeatureCatalog::standard().features()) {
    if (!h.empty()) h += ',';
    h += f.name;
  }
  return h;
}

/// One CSV row: ten ordinal values then 21 tag cells.
inline std::string annotation_row(const std::vector<int>& ordinal, const std::vector<std::string>& tags) {
  std::string r;
  for (int v : ordinal) r += std::to_string(v) + ",";
  for (std::size_t i = 0; i < tags.size(); ++i) r += tags[i] + (i + 1 < tags.size() ? "," : "");
  return r;
}

}  // namespace testing
