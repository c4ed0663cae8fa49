#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include <doctest.h>

#include "gam/agreement.hpp"
#include "gam/outcome.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gam;
using namespace gam::agreement;

namespace {

using Units = std::vector<std::vector<std::optional<double>>>;

ReliabilityMatrix matrix(const Units& units, Level level) {
  ReliabilityMatrix m;
  m.level = level;
  for (std::size_t r = 0; r < units.front().size(); ++r) m.raters.push_back(std::to_string(r));
  for (std::size_t u = 0; u < units.size(); ++u) m.units.push_back(std::to_string(u));
  m.cells = units;
  return m;
}

oracle::Metric metric(Level l) {
  switch (l) {
    case Level::Nominal: return oracle::Metric::Nominal;
    case Level::Ordinal: return oracle::Metric::Ordinal;
    case Level::Interval: return oracle::Metric::Interval;
  }
  return oracle::Metric::Nominal;
}

}  // namespace

TEST_SUITE("agreement") {
  TEST_CASE("bands") {
    CHECK(agreement_band(0.72) == AgreementBand::Substantial);
    CHECK(agreement_band(-0.5) == AgreementBand::VeryLow);
    CHECK(agreement_band(0.21) == AgreementBand::Acceptable);
    CHECK(agreement_band(0.0) == AgreementBand::Light);
    CHECK(agreement_band(0.41) == AgreementBand::Moderate);
    CHECK(agreement_band(0.61) == AgreementBand::Substantial);
    CHECK(agreement_band(0.81) == AgreementBand::Perfect);
    CHECK(agreement_band(1.0) == AgreementBand::Perfect);
    CHECK(to_string(AgreementBand::VeryLow) == "Very low");
  }

  TEST_CASE("hand-built nominal matrix") {
    // units: (a,a) (a,b) (b,b) (c,c); coincidences o_aa=2, o_ab=o_ba=1, o_bb=2, o_cc=2
    // n = 8, n_a = 3, n_b = 3, n_c = 2
    // D_o = 2/8; D_e = (n^2 - sum n_c^2) / (n(n-1)) = (64 - 22) / 56 = 0.75
    const Units u{{1, 1}, {1, 2}, {2, 2}, {3, 3}};
    const auto r = krippendorff_alpha(matrix(u, Level::Nominal));
    CHECK(r.alpha == doctest::Approx(1.0 - 0.25 / 0.75).epsilon(1e-14));
    CHECK(r.n_pairable == 8);
    CHECK(std::fabs(r.alpha - oracle::alpha(u, oracle::Metric::Nominal)) < 1e-12);
  }

  TEST_CASE("Krippendorff's reference example") {
    // The 4-rater, 12-unit example with missing values from Krippendorff (2011),
    // nominal alpha 0.743, interval 0.849.
    const std::optional<double> _;
    const Units u{{1, 1, _, 1}, {2, 2, 3, 2}, {3, 3, 3, 3}, {3, 3, 3, 3}, {2, 2, 2, 2},
                  {1, 2, 3, 4}, {4, 4, 4, 4}, {1, 1, 2, 1}, {2, 2, 2, 2}, {_, 5, 5, 5},
                  {_, _, 1, 1}, {_, _, 3, _}};
    CHECK(krippendorff_alpha(matrix(u, Level::Nominal)).alpha == doctest::Approx(0.743).epsilon(1e-3));
    CHECK(krippendorff_alpha(matrix(u, Level::Interval)).alpha == doctest::Approx(0.849).epsilon(1e-3));
    CHECK(krippendorff_alpha(matrix(u, Level::Ordinal)).alpha == doctest::Approx(0.815).epsilon(1e-3));
  }

  TEST_CASE("coincidence matrix equals pair enumeration") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> cat(1, 4);
    std::bernoulli_distribution gap(0.2);
    int checked = 0;
    for (int rep = 0; rep < 60; ++rep) {
      const int raters = 2 + rep % 3;
      const int units = 2 + rep % 5;
      Units u(units, std::vector<std::optional<double>>(raters));
      for (auto& row : u) {
        for (auto& c : row) {
          if (!gap(rng)) c = cat(rng);
        }
      }
      for (auto level : {Level::Nominal, Level::Ordinal, Level::Interval}) {
        AlphaResult r;
        try {
          r = krippendorff_alpha(matrix(u, level));
        } catch (const ComputationError&) {
          continue;
        }
        if (r.degenerate) continue;
        CHECK(std::fabs(r.alpha - oracle::alpha(u, metric(level))) < 1e-12);
        ++checked;
      }
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("degenerate and error cases") {
    const Units same{{2, 2}, {2, 2}};
    const auto r = krippendorff_alpha(matrix(same, Level::Nominal));
    CHECK(r.alpha == 1.0);
    CHECK(r.degenerate);

    const Units perfect{{1, 1, 1}, {2, 2, 2}, {4, 4, std::nullopt}};
    const auto p = krippendorff_alpha(matrix(perfect, Level::Ordinal));
    CHECK(p.alpha == 1.0);
    CHECK_FALSE(p.degenerate);

    const Units lonely{{1, std::nullopt}, {std::nullopt, 2}};
    CHECK_THROWS_AS(krippendorff_alpha(matrix(lonely, Level::Nominal)), ComputationError);

    const Units negative{{1, 2}, {2, 1}};
    CHECK(krippendorff_alpha(matrix(negative, Level::Nominal)).alpha < 0.0);

    ReliabilityMatrix one_rater = matrix({{1}}, Level::Nominal);
    CHECK_THROWS_AS(krippendorff_alpha(one_rater), std::invalid_argument);
  }

  TEST_CASE("pairwise alpha and report") {
    auto varied = [](int id) {
      auto s = testing::uniform_set(id, 4, 1, 0);
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t f = 0; f < 31; ++f) s.set(r, f, f < 10 ? int(r % 4) + 1 : int(r % 2));
      }
      return s;
    };
    const auto a = varied(1), b = varied(2), c = varied(3);
    const AnnotationSet sets[] = {a, b, c};
    const auto pa = pairwise_alpha(sets, "valence", Level::Ordinal);
    CHECK(pa.joint->alpha == 1.0);
    REQUIRE(pa.pairs.size() == 3);
    for (const auto& [ij, r] : pa.pairs) CHECK(r->alpha == 1.0);

    // a set with a tag entirely missing has no pairable values with its partner
    auto blank = AnnotationSet(4, a.sonnet_ids());
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t f = 0; f < 10; ++f) blank.set(r, f, 1);
    }
    const AnnotationSet with_blank[] = {a, blank};
    const auto pb = pairwise_alpha(with_blank, "Solitude", Level::Nominal);
    CHECK_FALSE(pb.pairs.front().second.defined());

    const auto median = build_median_annotator(sets);
    const auto rep = agreement_report(sets, &median);
    CHECK(rep.columns == std::vector<std::string>{"k_all", "k_12", "k_13", "k_23", "k_1m", "k_2m", "k_3m"});
    REQUIRE(rep.rows.size() == 31);
    CHECK(rep.rows[0].level == Level::Ordinal);
    CHECK(rep.rows[30].level == Level::Nominal);
    for (const auto& row : rep.rows) {
      for (const auto& cell : row.cells) {
        CHECK(cell.result->alpha == 1.0);
        CHECK_FALSE(cell.below_threshold);
      }
    }

    const AnnotationSet two[] = {a, b};
    const auto rep2 = agreement_report(two, nullptr);
    CHECK(rep2.columns == std::vector<std::string>{"k_all", "k_12"});
    CHECK(rep2.warnings.size() == 1);
  }
}
