#include "gam/catalog.hpp"

#include <set>
#include <stdexcept>

namespace gam {

FeatureCatalog::FeatureCatalog(std::vector<FeatureSpec> features)
    : features_(std::move(features)) {
  std::set<std::string> seen;
  for (const auto& f : features_) {
    if (!seen.insert(f.name).second) throw std::logic_error("duplicate feature " + f.name);
  }
}

const FeatureCatalog& FeatureCatalog::standard() {
  static const FeatureCatalog catalog = [] {
    std::vector<FeatureSpec> f;
    for (const char* name :
         {"valence", "arousal", "happiness", "disgust", "anger", "sadness", "fear"}) {
      f.push_back({name, FeatureKind::Affective, 1, 4});
    }
    for (const char* name : {"concreteness", "imageability", "context availability"}) {
      f.push_back({name, FeatureKind::LexicoSemantic, 1, 4});
    }
    for (const char* name :
         {"Solitude", "Anxiety", "Illusion", "Anger", "Daydream", "Instability", "Grandeur",
          "Idealization", "Pride", "Depression", "Irritability", "Disappointment",
          "Dramatisation", "Prejudice", "Aversion", "Insecurity", "Helplessness",
          "Vulnerability", "Fear", "Obsession", "Compulsion"}) {
      f.push_back({name, FeatureKind::Psychological, 0, 1});
    }
    return FeatureCatalog(std::move(f));
  }();
  return catalog;
}

std::size_t FeatureCatalog::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (features_[i].name == name) return i;
  }
  return npos;
}

const FeatureSpec& FeatureCatalog::at(std::string_view name) const {
  const auto i = index_of(name);
  if (i == npos) throw std::out_of_range("unknown feature '" + std::string(name) + "'");
  return features_[i];
}

std::vector<std::string> FeatureCatalog::names(FeatureKind kind) const {
  std::vector<std::string> out;
  for (const auto& f : features_) {
    if (f.kind == kind) out.push_back(f.name);
  }
  return out;
}

std::vector<std::string> FeatureCatalog::ordinal_names() const {
  auto out = names(FeatureKind::Affective);
  for (auto& n : names(FeatureKind::LexicoSemantic)) out.push_back(std::move(n));
  return out;
}

}  // namespace gam
