// Randomized properties; every case runs kCases independent draws.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "gam/agreement.hpp"
#include "gam/catalog.hpp"
#include "gam/features.hpp"
#include "gam/stats.hpp"
#include "gam/text.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gam;
using features::GamFeature;
using lexicon::Dimension;

namespace {

constexpr int kCases = 1000;

std::vector<features::WordObservation> random_words(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 14);
  std::uniform_real_distribution<double> va(1.0, 9.0);
  std::uniform_int_distribution<int> coarse(1, 5);  // forces ties
  std::bernoulli_distribution present(0.8), use_coarse(0.3);
  std::vector<features::WordObservation> out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    features::WordObservation o;
    o.position = static_cast<std::size_t>(i + 1);
    for (auto d : {Dimension::Valence, Dimension::Arousal, Dimension::Fear}) {
      if (!present(rng)) continue;
      const double m = use_coarse(rng) ? coarse(rng) : va(rng);
      o.values[lexicon::index(d)] = lexicon::Norm{m, va(rng) / 9.0};
    }
    out.push_back(o);
  }
  return out;
}

bool same(const Real& a, const Real& b) {
  if (a.defined() != b.defined()) return false;
  return !a.defined() || std::fabs(a.value() - b.value()) <= 1e-12 * (1 + std::fabs(a.value()));
}

agreement::ReliabilityMatrix random_matrix(std::mt19937_64& rng, agreement::Level level) {
  std::uniform_int_distribution<int> raters(2, 4), units(2, 12), value(1, 4);
  std::bernoulli_distribution gap(0.15);
  agreement::ReliabilityMatrix m;
  m.level = level;
  const int r = raters(rng), u = units(rng);
  for (int i = 0; i < r; ++i) m.raters.push_back(std::to_string(i));
  for (int i = 0; i < u; ++i) {
    m.units.push_back(std::to_string(i));
    std::vector<std::optional<double>> row;
    for (int j = 0; j < r; ++j) row.push_back(gap(rng) ? std::nullopt : std::optional<double>(value(rng)));
    m.cells.push_back(row);
  }
  return m;
}

std::optional<agreement::AlphaResult> try_alpha(const agreement::ReliabilityMatrix& m) {
  try {
    return agreement::krippendorff_alpha(m);
  } catch (const ComputationError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("GAM features ignore observation order; reversing positions negates Cor") {
    std::mt19937_64 rng(1);
    for (int c = 0; c < kCases; ++c) {
      auto words = random_words(rng);
      const auto base = features::compute_features(words);
      auto shuffled = words;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const auto f = features::compute_features(shuffled);
      for (std::size_t i = 0; i < features::kGamFeatureCount; ++i) {
        REQUIRE(same(base.values()[i], f.values()[i]));
      }
      const auto len = words.size();
      for (auto& w : words) w.position = len + 1 - w.position;
      const auto rev = features::compute_features(words);
      for (auto g : {GamFeature::CorAro, GamFeature::CorVal}) {
        REQUIRE(base[g].defined() == rev[g].defined());
        if (base[g]) REQUIRE(rev[g].value() == doctest::Approx(-base[g].value()));
      }
      for (auto g : {GamFeature::AbsCorAro, GamFeature::AbsCorVal}) REQUIRE(same(base[g], rev[g]));
    }
  }

  TEST_CASE("extrema sandwich the mean, spans are max - min, sigma = mean sqrt N") {
    std::mt19937_64 rng(2);
    for (int c = 0; c < kCases; ++c) {
      const auto words = random_words(rng);
      const auto f = features::compute_features(words);
      struct Dim {
        Dimension d;
        GamFeature mean, max, min, span, sigma;
      };
      for (const auto& d : {Dim{Dimension::Valence, GamFeature::ValenceMean, GamFeature::MaxValence,
                                GamFeature::MinValence, GamFeature::ValenceSpan, GamFeature::SigmaVal},
                            Dim{Dimension::Arousal, GamFeature::ArousalMean, GamFeature::MaxArousal,
                                GamFeature::MinArousal, GamFeature::ArousalSpan, GamFeature::SigmaAro}}) {
        std::size_t rated = 0;
        for (const auto& w : words) rated += w.values[lexicon::index(d.d)].has_value();
        REQUIRE(f[d.mean].defined() == (rated > 0));
        if (rated == 0) continue;
        const double mean = f[d.mean].value();
        REQUIRE(f[d.min].value() <= mean + 1e-12);
        REQUIRE(mean <= f[d.max].value() + 1e-12);
        REQUIRE(f[d.span].value() == doctest::Approx(f[d.max].value() - f[d.min].value()));
        REQUIRE(f[d.span].value() >= 0.0);
        REQUIRE(f[d.sigma].value() == doctest::Approx(mean * std::sqrt(double(rated))));
      }
    }
  }

  TEST_CASE("alpha agrees with the pair-enumeration oracle") {
    std::mt19937_64 rng(3);
    int compared = 0;
    for (int c = 0; c < kCases; ++c) {
      const auto level = static_cast<agreement::Level>(c % 3);
      const auto m = random_matrix(rng, level);
      const auto r = try_alpha(m);
      if (!r || r->degenerate) continue;
      const auto metric = static_cast<oracle::Metric>(c % 3);
      REQUIRE(std::fabs(r->alpha - oracle::alpha(m.cells, metric)) < 1e-10);
      ++compared;
    }
    CHECK(compared > kCases * 9 / 10);
  }

  TEST_CASE("alpha is invariant under rater and unit permutation and category relabeling") {
    std::mt19937_64 rng(4);
    for (int c = 0; c < kCases; ++c) {
      const auto level = static_cast<agreement::Level>(c % 3);
      auto m = random_matrix(rng, level);
      const auto base = try_alpha(m);
      if (!base) continue;

      auto p = m;
      std::shuffle(p.cells.begin(), p.cells.end(), rng);
      std::vector<std::size_t> perm(m.raters.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& row : p.cells) {
        auto copy = row;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = copy[perm[j]];
      }
      const auto permuted = try_alpha(p);
      REQUIRE(permuted.has_value());
      REQUIRE(permuted->alpha == doctest::Approx(base->alpha).epsilon(1e-12));

      // nominal: any bijection; ordinal: any increasing map; interval: any
      // affine map with positive slope.
      std::vector<double> map{0, 1, 2, 3, 4};
      if (level == agreement::Level::Nominal) {
        std::shuffle(map.begin() + 1, map.end(), rng);
        for (auto& v : map) v = v * 10 + 3;
      } else if (level == agreement::Level::Ordinal) {
        for (std::size_t i = 1; i < map.size(); ++i) map[i] = map[i - 1] + 1 + double(rng() % 7);
      } else {
        for (auto& v : map) v = 2.5 * v - 7;
      }
      auto relabeled = m;
      for (auto& row : relabeled.cells) {
        for (auto& v : row) {
          if (v) v = map[static_cast<std::size_t>(*v)];
        }
      }
      const auto rl = try_alpha(relabeled);
      REQUIRE(rl->alpha == doctest::Approx(base->alpha).epsilon(1e-12));
    }
  }

  TEST_CASE("perfect agreement gives alpha 1") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> value(1, 4);
    for (int c = 0; c < kCases; ++c) {
      auto m = random_matrix(rng, static_cast<agreement::Level>(c % 3));
      for (auto& row : m.cells) {
        const double v = value(rng);
        for (auto& cell : row) {
          if (cell) cell = v;
        }
      }
      const auto r = try_alpha(m);
      if (!r) continue;
      REQUIRE(r->alpha == 1.0);
    }
  }

  TEST_CASE("median of three is one of the three; valence reversal is an involution") {
    std::mt19937_64 rng(6);
    const auto& cat = FeatureCatalog::standard();
    std::uniform_int_distribution<int> ord(1, 4), bin(0, 1);
    std::bernoulli_distribution gap(0.1);
    const std::size_t rows = 4;
    for (int c = 0; c < kCases; ++c) {
      std::vector<AnnotationSet> sets;
      for (int id = 1; id <= 3; ++id) {
        auto s = testing::uniform_set(id, rows, 1, 0);
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t f = 0; f < cat.size(); ++f) {
            const bool binary = cat.features()[f].binary();
            s.set(r, f, binary && gap(rng) ? Cell() : Cell(binary ? bin(rng) : ord(rng)));
          }
        }
        sets.push_back(std::move(s));
      }
      const auto m = build_median_annotator(sets);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t f = 0; f < cat.size(); ++f) {
          std::vector<int> vals;
          for (const auto& s : sets) {
            if (s.get(r, f)) vals.push_back(*s.get(r, f));
          }
          const auto v = m.get(r, f);
          if (vals.size() < 2) {
            REQUIRE_FALSE(v.has_value());
            continue;
          }
          REQUIRE(v.has_value());
          REQUIRE(std::find(vals.begin(), vals.end(), *v) != vals.end());
          std::sort(vals.begin(), vals.end());
          REQUIRE(*v == vals[(vals.size() - 1) / 2]);
        }
      }
      const auto& s = sets[c % 3];
      REQUIRE(reverse_ordinal_scale(reverse_ordinal_scale(s, "valence"), "valence") == s);
      REQUIRE_FALSE(reverse_ordinal_scale(s, "valence") == s);
    }
  }

  TEST_CASE("spearman is invariant under strictly increasing transforms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(2, 25), coarse(0, 6);
    std::normal_distribution<double> z;
    for (int c = 0; c < kCases; ++c) {
      const int n = len(rng);
      std::vector<double> x, y;
      for (int i = 0; i < n; ++i) {
        x.push_back(c % 2 ? coarse(rng) : z(rng));
        y.push_back(z(rng));
      }
      const auto base = stats::spearman(x, y);
      std::vector<double> tx;
      for (double v : x) tx.push_back(std::exp(v / 4) * 3 + 1);
      const auto t = stats::spearman(tx, y);
      REQUIRE(base.defined() == t.defined());
      if (!base) continue;
      REQUIRE(t->rho == doctest::Approx(base->rho).epsilon(1e-12));
      REQUIRE(base->rho == doctest::Approx(oracle::spearman(x, y)).epsilon(1e-10));
      REQUIRE(std::fabs(base->rho) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("OLS residuals are orthogonal to the design") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> kd(1, 5);
    std::normal_distribution<double> z;
    for (int c = 0; c < kCases; ++c) {
      const int k = kd(rng);
      const int n = k + 3 + static_cast<int>(rng() % 20);
      Eigen::MatrixXd X(n, k);
      Eigen::VectorXd y(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) X(i, j) = z(rng) * (j + 1);
        y(i) = 0.5 * X(i, 0) + z(rng);
      }
      const auto r = stats::ols(X, y);
      Eigen::VectorXd resid = y.array() - r.intercept;
      for (int j = 0; j < k; ++j) resid -= r.coefficients[static_cast<std::size_t>(j)] * X.col(j);
      const double scale = 1.0 + y.norm() * X.norm();
      REQUIRE(std::fabs(resid.sum()) < 1e-9 * scale);
      for (int j = 0; j < k; ++j) REQUIRE(std::fabs(X.col(j).dot(resid)) < 1e-9 * scale);
      REQUIRE(r.r_squared >= -1e-12);
      REQUIRE(r.r_squared <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("normalized positions are contiguous and never hold stopwords") {
    std::mt19937_64 rng(9);
    const std::vector<std::string> vocab{"el", "amor", "la", "noche", "de", "Sol", "y", "luz,",
                                         "¡Oh", "corazón", "que", "ARDE."};
    text::NormalizationConfig norm;
    norm.mode = text::Mode::Stem;
    norm.stopwords = text::default_spanish_stopwords();
    for (int c = 0; c < kCases; ++c) {
      std::string line;
      const auto n = rng() % 15;
      for (std::size_t i = 0; i < n; ++i) line += vocab[rng() % vocab.size()] + " ";
      const auto toks = text::normalize(line, norm);
      for (std::size_t i = 0; i < toks.size(); ++i) {
        REQUIRE(toks[i].position == i + 1);
        REQUIRE_FALSE(norm.stopwords.contains(toks[i].surface));
      }
    }
  }
}
