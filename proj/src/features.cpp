#include "gam/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "gam/stats.hpp"

namespace gam::features {

namespace {

using lexicon::Dimension;

constexpr std::array<std::string_view, kGamFeatureCount> kNames = {
    "valence_mean",      "valence_sd",      "arousal_mean",      "arousal_sd",
    "happiness_mean",    "happiness_sd",    "anger_mean",        "anger_sd",
    "sadness_mean",      "sadness_sd",      "fear_mean",         "fear_sd",
    "disgust_mean",      "disgust_sd",      "concreteness_mean", "concreteness_sd",
    "imageability_mean", "imageability_sd", "cont_ava_mean",     "cont_ava_sd",
    "max_arousal",       "min_arousal",     "max_valence",       "min_valence",
    "arousal_span",      "valence_span",    "CorAro",            "CorVal",
    "AbsCorAro",         "AbsCorVal",       "sigma_aro",         "sigma_val"};

struct AxisFeatures {
  GamFeature max;
  GamFeature min;
  GamFeature span;
  GamFeature cor;
  GamFeature abs_cor;
  GamFeature sigma;
};

}  // namespace

std::string_view name(GamFeature f) noexcept { return kNames[static_cast<std::size_t>(f)]; }

std::optional<GamFeature> parse_gam_feature(std::string_view text) {
  for (std::size_t i = 0; i < kGamFeatureCount; ++i) {
    if (kNames[i] == text) return static_cast<GamFeature>(i);
  }
  return std::nullopt;
}

std::array<GamFeature, kGamFeatureCount> all_gam_features() {
  std::array<GamFeature, kGamFeatureCount> out{};
  for (std::size_t i = 0; i < kGamFeatureCount; ++i) out[i] = static_cast<GamFeature>(i);
  return out;
}

GamFeature mean_feature(Dimension d) noexcept {
  return static_cast<GamFeature>(2 * lexicon::index(d));
}

GamFeature sd_feature(Dimension d) noexcept {
  return static_cast<GamFeature>(2 * lexicon::index(d) + 1);
}

std::vector<WordObservation> observe_words(std::string_view text,
                                           const lexicon::MergedLexicon& merged,
                                           const text::NormalizationConfig& norm) {
  std::vector<WordObservation> out;
  for (auto& token : text::normalize(text, norm)) {
    auto values = merged.lookup(token.normalized);
    if (!values) continue;
    out.push_back({token.position, std::move(token.normalized), *values});
  }
  return out;
}

std::vector<WordObservation> observe_words(const Sonnet& sonnet,
                                           const lexicon::MergedLexicon& merged,
                                           const text::NormalizationConfig& norm) {
  return observe_words(sonnet.text, merged, norm);
}

GamFeatureVector compute_features(std::span<const WordObservation> observations) {
  GamFeatureVector out;
  for (auto d : lexicon::kDimensions) {
    const auto di = lexicon::index(d);
    std::vector<double> means;
    std::vector<double> sds;
    for (const auto& o : observations) {
      if (!o.values[di]) continue;
      means.push_back(o.values[di]->mean);
      if (o.values[di]->sd) sds.push_back(*o.values[di]->sd);
    }
    const auto dim = std::string(lexicon::name(d));
    out[mean_feature(d)] = means.empty()
                               ? Real::undefined("no lexicon-matched words rated on " + dim)
                               : Real::ok(stats::mean(means));
    out[sd_feature(d)] = sds.empty() ? Real::undefined("no word sd available for " + dim)
                                     : Real::ok(stats::mean(sds));
  }

  const std::pair<Dimension, AxisFeatures> axes[] = {
      {Dimension::Arousal,
       {GamFeature::MaxArousal, GamFeature::MinArousal, GamFeature::ArousalSpan,
        GamFeature::CorAro, GamFeature::AbsCorAro, GamFeature::SigmaAro}},
      {Dimension::Valence,
       {GamFeature::MaxValence, GamFeature::MinValence, GamFeature::ValenceSpan,
        GamFeature::CorVal, GamFeature::AbsCorVal, GamFeature::SigmaVal}},
  };
  for (const auto& [dim, f] : axes) {
    const auto di = lexicon::index(dim);
    std::vector<double> means;
    std::vector<double> positions;
    for (const auto& o : observations) {
      if (!o.values[di]) continue;
      means.push_back(o.values[di]->mean);
      positions.push_back(static_cast<double>(o.position));
    }
    if (means.empty()) {
      const auto reason = "no lexicon-matched words rated on " + std::string(lexicon::name(dim));
      for (auto g : {f.max, f.min, f.span, f.cor, f.abs_cor, f.sigma}) {
        out[g] = Real::undefined(reason);
      }
      continue;
    }
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    out[f.max] = Real::ok(*hi);
    out[f.min] = Real::ok(*lo);
    out[f.span] = Real::ok(*hi - *lo);
    out[f.sigma] =
        Real::ok(out[mean_feature(dim)].value() * std::sqrt(static_cast<double>(means.size())));
    if (means.size() < 2) {
      out[f.cor] = Real::undefined("needs >= 2 points");
      out[f.abs_cor] = out[f.cor];
      continue;
    }
    const auto rho = stats::spearman(means, positions);
    if (!rho) {
      out[f.cor] = Real::undefined(rho.reason());
      out[f.abs_cor] = out[f.cor];
      continue;
    }
    out[f.cor] = Real::ok(rho->rho);
    out[f.abs_cor] = Real::ok(std::fabs(rho->rho));
  }
  return out;
}

const GamFeatureVector* FeatureMatrix::find(const std::string& sonnet_id) const {
  const auto it = std::find(sonnet_ids.begin(), sonnet_ids.end(), sonnet_id);
  if (it == sonnet_ids.end()) return nullptr;
  return &rows[static_cast<std::size_t>(it - sonnet_ids.begin())];
}

FeatureMatrix compute_corpus_matrix(const Corpus& corpus, const lexicon::MergedLexicon& merged,
                                    const text::NormalizationConfig& norm) {
  FeatureMatrix m;
  for (const auto& s : corpus.sonnets()) {
    m.sonnet_ids.push_back(s.metadata.sonnet_id);
    m.rows.push_back(compute_features(observe_words(s, merged, norm)));
    for (std::size_t f = 0; f < kGamFeatureCount; ++f) {
      if (!m.rows.back().values()[f]) ++m.undefined_counts[f];
    }
  }
  return m;
}

}  // namespace gam::features
