#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gam/catalog.hpp"
#include "gam/validation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gam;
using namespace gam::validation;
using features::GamFeature;

namespace {

constexpr std::size_t kValence = 0;

// A matrix where only valence_mean and arousal_mean are defined.
features::FeatureMatrix two_feature_matrix(const std::vector<double>& val,
                                           const std::vector<double>& aro) {
  features::FeatureMatrix m;
  for (std::size_t i = 0; i < val.size(); ++i) {
    m.sonnet_ids.push_back("s" + std::to_string(i + 1));
    features::GamFeatureVector v;
    v[GamFeature::ValenceMean] = Real::ok(val[i]);
    v[GamFeature::ArousalMean] = Real::ok(aro[i]);
    m.rows.push_back(v);
  }
  return m;
}

}  // namespace

TEST_SUITE("validation") {
  TEST_CASE("pairings") {
    CHECK(feature_pairings().size() == 10);
    CHECK(feature_pairings()[9].gam == GamFeature::ContAvaMean);
    const auto cats = default_categories();
    CHECK(cats.size() == 22);
    CHECK(cats.front() == "all");
  }

  TEST_CASE("bivariate: a monotone relation gives rho 1") {
    const std::size_t n = 12;
    auto median = testing::uniform_set(0, n, 1, 0);
    std::vector<double> val, aro;
    for (std::size_t r = 0; r < n; ++r) {
      median.set(r, kValence, int(r % 4) + 1);
      val.push_back(2.0 * double(r % 4 + 1));
      aro.push_back(double(r));
    }
    const auto cells = bivariate_report(two_feature_matrix(val, aro), median);
    REQUIRE(cells.size() == 10 * 32);
    CHECK(cells[0].annotated == "valence");
    CHECK(cells[0].gam == "valence_mean");
    CHECK(cells[0].n == n);
    CHECK(cells[0].result->rho == doctest::Approx(1.0));
    CHECK_FALSE(cells[1].result.defined());  // valence_sd never defined
    CHECK(cells[1].n == 0);
    // arousal annotated is constant -> zero variance
    CHECK_FALSE(cells[32].result.defined());
  }

  TEST_CASE("partial dependence matches the normal equations") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(1.0, 9.0);
    std::uniform_int_distribution<int> y4(1, 4);
    const std::size_t n = 30;
    auto median = testing::uniform_set(0, n, 2, 0);
    const auto& cat = FeatureCatalog::standard();
    const auto solitude = cat.index_of("Solitude");
    std::vector<double> val, aro, y;
    for (std::size_t r = 0; r < n; ++r) {
      const int v = y4(rng);
      median.set(r, kValence, v);
      y.push_back(v);
      val.push_back(v + u(rng) / 3.0);
      aro.push_back(u(rng));
      median.set(r, solitude, r < 3 ? 1 : 0);
    }
    DecisionLog log;
    const auto rows = partial_dependence_report(two_feature_matrix(val, aro), median,
                                                {"all", "Solitude"}, &log);
    REQUIRE(rows.size() == 20);
    const auto& r = rows[0];
    REQUIRE(r.computable);
    CHECK(r.n == n);
    CHECK(r.k == 2);
    CHECK(r.predictor_set == "gam32");
    CHECK(r.unavailable_predictors.size() == 30);

    std::vector<std::vector<double>> X;
    for (std::size_t i = 0; i < n; ++i) X.push_back({val[i], aro[i]});
    const auto o = oracle::normal_equations(X, y);
    CHECK(r.coefficient == doctest::Approx(o.beta[1]).epsilon(1e-10));
    CHECK(r.p_value == doctest::Approx(o.p[1]).epsilon(1e-6));
    CHECK(r.r_squared == doctest::Approx(o.r2).epsilon(1e-10));
    CHECK(r.adjusted_r_squared == doctest::Approx(o.adj_r2).epsilon(1e-10));
    CHECK(r.significant == (o.p[1] < 0.05 && o.beta[1] > 0));

    // Solitude has 3 members for 2 predictors: pruned, then not computable
    const auto& s = rows[10];
    CHECK(s.category == "Solitude");
    CHECK_FALSE(s.computable);
    CHECK(s.predictor_set == "lexical20");
    CHECK_FALSE(s.reason.empty());
    const auto counts = log.counts();
    CHECK(counts.at("partial.pruned_to_lexical") == 2);  // only the two defined pairings
    CHECK(counts.at("partial.not_computable") >= 10);
    CHECK(counts.at("partial.undefined_predictor_skipped") == 20);
  }

  TEST_CASE("partial dependence drops an exactly collinear predictor") {
    const std::size_t n = 20;
    auto median = testing::uniform_set(0, n, 2, 0);
    features::FeatureMatrix m;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(1.0, 9.0);
    for (std::size_t i = 0; i < n; ++i) {
      median.set(i, kValence, int(i % 4) + 1);
      m.sonnet_ids.push_back("s" + std::to_string(i + 1));
      features::GamFeatureVector v;
      const double hi = u(rng), lo = u(rng) - 5;
      v[GamFeature::ValenceMean] = Real::ok(u(rng));
      v[GamFeature::MaxValence] = Real::ok(hi);
      v[GamFeature::MinValence] = Real::ok(lo);
      v[GamFeature::ValenceSpan] = Real::ok(hi - lo);
      m.rows.push_back(v);
    }
    DecisionLog log;
    const auto rows = partial_dependence_report(m, median, {"all"}, &log);
    REQUIRE(rows[0].computable);
    CHECK(rows[0].k == 3);
    CHECK(rows[0].dropped_predictors == std::vector<std::string>{"valence_span"});
    CHECK(log.counts().at("partial.collinear_dropped") == 1);  // only valence has it defined
  }

  TEST_CASE("anova splits on the median tag") {
    const std::size_t n = 16;
    auto median = testing::uniform_set(0, n, 2, 0);
    const auto solitude = FeatureCatalog::standard().index_of("Solitude");
    std::vector<double> val, aro;
    for (std::size_t r = 0; r < n; ++r) {
      // identical value lists in both groups
      val.push_back(double(r / 2));
      aro.push_back(r < 8 ? 1.0 : 5.0 + double(r % 3));
      median.set(r, solitude, r % 2 == 0 ? Cell(1) : (r == 1 ? Cell() : Cell(0)));
    }
    DecisionLog log;
    const auto rep = anova_report(two_feature_matrix(val, aro), median, &log);
    CHECK(rep.rows.size() == 21 * 10);
    const AnovaRow* sv = nullptr;
    for (const auto& r : rep.rows) {
      if (r.category == "Solitude" && r.gam_feature == "valence_mean") sv = &r;
    }
    REQUIRE(sv != nullptr);
    CHECK(sv->n_in == 8);
    CHECK(sv->n_out == 8);  // the missing median counts as out-group
    CHECK(sv->f_statistic == doctest::Approx(0.0));
    CHECK(sv->p_value == doctest::Approx(1.0));
    CHECK_FALSE(sv->significant);
    // tags nobody carries leave an empty in-group
    CHECK(log.counts().at("anova.not_computable") > 0);
    CHECK(rep.significant_rows().size() == rep.n_significant);
  }
}
