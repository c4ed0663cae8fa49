#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gam {

enum class FeatureKind { Affective, LexicoSemantic, Psychological };

struct FeatureSpec {
  std::string name;
  FeatureKind kind;
  int min_value;
  int max_value;

  bool ordinal() const noexcept { return kind != FeatureKind::Psychological; }
  bool binary() const noexcept { return kind == FeatureKind::Psychological; }
  bool in_range(int v) const noexcept { return v >= min_value && v <= max_value; }
};

/// The 31 annotated features: 7 affective and 3 lexico-semantic on an
/// integer 1..4 scale, then 21 binary psychological tags. Names are
/// case-sensitive: "anger"/"fear" are ordinal, "Anger"/"Fear" are tags.
class FeatureCatalog {
 public:
  static const FeatureCatalog& standard();

  const std::vector<FeatureSpec>& features() const noexcept { return features_; }
  std::size_t size() const noexcept { return features_.size(); }

  /// Index into features(), or npos.
  std::size_t index_of(std::string_view name) const noexcept;
  const FeatureSpec& at(std::string_view name) const;  // throws std::out_of_range
  bool contains(std::string_view name) const noexcept { return index_of(name) != npos; }

  std::vector<std::string> names(FeatureKind kind) const;
  /// Affective followed by lexico-semantic names (the ten 1..4 features).
  std::vector<std::string> ordinal_names() const;
  std::vector<std::string> psychological_names() const { return names(FeatureKind::Psychological); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  explicit FeatureCatalog(std::vector<FeatureSpec> features);
  std::vector<FeatureSpec> features_;
};

}  // namespace gam
