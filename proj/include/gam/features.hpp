#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gam/corpus.hpp"
#include "gam/lexicon.hpp"
#include "gam/outcome.hpp"

namespace gam::features {

/// The 32 inferred features, in export order: a mean/sd pair per lexicon
/// dimension, then extrema, spans, position correlations and sigmas.
enum class GamFeature : std::size_t {
  ValenceMean, ValenceSd, ArousalMean, ArousalSd, HappinessMean, HappinessSd,
  AngerMean, AngerSd, SadnessMean, SadnessSd, FearMean, FearSd,
  DisgustMean, DisgustSd, ConcretenessMean, ConcretenessSd,
  ImageabilityMean, ImageabilitySd, ContAvaMean, ContAvaSd,
  MaxArousal, MinArousal, MaxValence, MinValence,
  ArousalSpan, ValenceSpan,
  CorAro, CorVal, AbsCorAro, AbsCorVal,
  SigmaAro, SigmaVal,
};

inline constexpr std::size_t kGamFeatureCount = 32;

std::string_view name(GamFeature f) noexcept;
std::optional<GamFeature> parse_gam_feature(std::string_view text);
std::array<GamFeature, kGamFeatureCount> all_gam_features();
GamFeature mean_feature(lexicon::Dimension d) noexcept;
GamFeature sd_feature(lexicon::Dimension d) noexcept;

struct WordObservation {
  std::size_t position = 0;  // 1-based among non-stopword tokens
  std::string key;
  lexicon::NormSet values;
};

class GamFeatureVector {
 public:
  const Real& operator[](GamFeature f) const { return values_[static_cast<std::size_t>(f)]; }
  Real& operator[](GamFeature f) { return values_[static_cast<std::size_t>(f)]; }
  const std::array<Real, kGamFeatureCount>& values() const noexcept { return values_; }

 private:
  std::array<Real, kGamFeatureCount> values_;
};

/// Normalizes the text and looks up every surviving token; tokens without
/// a lexicon entry are dropped, positions are those after stopword removal.
std::vector<WordObservation> observe_words(std::string_view text,
                                           const lexicon::MergedLexicon& merged,
                                           const text::NormalizationConfig& norm);
std::vector<WordObservation> observe_words(const Sonnet& sonnet,
                                           const lexicon::MergedLexicon& merged,
                                           const text::NormalizationConfig& norm);

/// Per dimension: mean of word means and mean of word sds. Extrema and
/// spans over arousal/valence word means. CorAro/CorVal: Spearman rho of
/// (word mean, position). sigma_x = x_mean * sqrt(N), N = number of words
/// rated on x. Anything over an empty or degenerate set is undefined with a
/// reason.
GamFeatureVector compute_features(std::span<const WordObservation> observations);

struct FeatureMatrix {
  std::vector<std::string> sonnet_ids;
  std::vector<GamFeatureVector> rows;
  std::array<std::size_t, kGamFeatureCount> undefined_counts{};

  const GamFeatureVector* find(const std::string& sonnet_id) const;
  std::size_t size() const noexcept { return rows.size(); }
};

FeatureMatrix compute_corpus_matrix(const Corpus& corpus, const lexicon::MergedLexicon& merged,
                                    const text::NormalizationConfig& norm);

}  // namespace gam::features
