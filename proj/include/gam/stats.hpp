#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gam/outcome.hpp"

namespace gam::stats {

// ---------------------------------------------------------------------------
// Special functions and distribution tails

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
/// Throws std::domain_error unless a > 0, b > 0 and 0 <= x <= 1.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student t statistic with `df` degrees of freedom.
double t_tail(double t, double df);

/// Upper-tail probability P(F > f) for an F(df1, df2) variate.
double f_upper_tail(double f, double df1, double df2);

/// Inverse of the two-sided t tail: the t > 0 with t_tail(t, df) == p.
double t_critical(double p_two_sided, double df);

// ---------------------------------------------------------------------------
// Correlation

enum class CorrelationBand { Negligible, Weak, Moderate, Strong, VeryStrong };

std::string to_string(CorrelationBand band);

/// Band on |rho|: <0.1 negligible, [0.1,0.4) weak, [0.4,0.7) moderate,
/// [0.7,0.9) strong, >=0.9 very strong.
CorrelationBand correlation_band(double rho);

struct CorrelationResult {
  double rho = 0.0;
  std::size_t n = 0;
  CorrelationBand band = CorrelationBand::Negligible;
};

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rho = Pearson correlation of average ranks. Undefined when either
/// series is constant. Throws std::invalid_argument on length mismatch or n < 2.
Outcome<CorrelationResult> spearman(std::span<const double> x, std::span<const double> y);

/// Pearson correlation; undefined for a constant series.
Real pearson(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Ordinary least squares

struct RegressionResult {
  double intercept = 0.0;
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<double> t_values;
  std::vector<double> p_values;
  double r_squared = 0.0;
  double adjusted_r_squared = 0.0;
  std::size_t n = 0;
  std::size_t k = 0;
};

/// Raised by ols() when the design (with intercept) is not of full column
/// rank. `columns()` lists the 0-based predictor indices found dependent.
class RankDeficientError : public ComputationError {
 public:
  RankDeficientError(const std::string& what, std::vector<std::size_t> columns)
      : ComputationError(what), columns_(std::move(columns)) {}
  const std::vector<std::size_t>& columns() const noexcept { return columns_; }

 private:
  std::vector<std::size_t> columns_;
};

/// Relative tolerance for rank decisions in ols() and independent_columns().
inline constexpr double kRankTolerance = 1e-10;

/// OLS with an intercept, solved by column-pivoting Householder QR.
/// X is n x k (predictors only). Requires n > k + 1 and full column rank.
RegressionResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

/// Greedy scan of X's columns in order (after an implicit intercept column):
/// returns the indices of the columns that add rank, so a caller can keep a
/// preferred predictor by listing it first.
std::vector<std::size_t> independent_columns(const Eigen::MatrixXd& X,
                                             double tolerance = kRankTolerance);

// ---------------------------------------------------------------------------
// One-way ANOVA

struct AnovaResult {
  double f_statistic = 0.0;
  double p_value = 1.0;
  std::vector<double> group_means;
  std::vector<std::size_t> group_sizes;
  double df_between = 0.0;
  double df_within = 0.0;
  /// Set when F is 0/0 (every value identical) or x/0 (no within-group
  /// variance, unequal means). p is 1 and 0 respectively.
  bool degenerate = false;
  std::string note;
};

/// Throws std::invalid_argument for < 2 groups, an empty group, or N <= k.
AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups);

// ---------------------------------------------------------------------------
// Power analysis

/// Power of a two-sided two-sample equal-variance t test with `n` per group
/// and standardized effect `cohens_d`, from the noncentral t distribution.
double two_sample_power(std::size_t n_per_group, double alpha, double cohens_d);

/// Smallest per-group n reaching `power`. Starts from the normal
/// approximation and walks to the exact boundary.
std::size_t min_sample_size(double alpha, double power, double cohens_d);

// ---------------------------------------------------------------------------
// Small helpers shared by other modules

double mean(std::span<const double> values);
/// Sample standard deviation (n - 1 denominator); 0 for n < 2.
double sample_sd(std::span<const double> values);
/// Median; even count averages the two central values. Throws on empty input.
double median(std::vector<double> values);

}  // namespace gam::stats
