#include "gam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/non_central_t.hpp>
#include <boost/math/distributions/normal.hpp>
#include <fmt/format.h>

namespace gam::stats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw ComputationError(
      fmt::format("incomplete beta: continued fraction did not converge (a={}, b={}, x={})", a,
                  b, x));
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0) || !std::isfinite(a) ||
      !std::isfinite(b)) {
    throw std::domain_error(
        fmt::format("regularized_incomplete_beta: invalid arguments a={}, b={}, x={}", a, b, x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double t_tail(double t, double df) {
  if (!(df > 0.0)) throw std::domain_error("t_tail: df must be positive");
  if (std::isnan(t)) throw std::domain_error("t_tail: t is NaN");
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return std::clamp(regularized_incomplete_beta(df / 2.0, 0.5, x), 0.0, 1.0);
}

double f_upper_tail(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) throw std::domain_error("f_upper_tail: df must be positive");
  if (std::isnan(f)) throw std::domain_error("f_upper_tail: f is NaN");
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  const double x = df2 / (df2 + df1 * f);
  return std::clamp(regularized_incomplete_beta(df2 / 2.0, df1 / 2.0, x), 0.0, 1.0);
}

double t_critical(double p_two_sided, double df) {
  if (!(p_two_sided > 0.0 && p_two_sided < 1.0)) {
    throw std::domain_error("t_critical: p must lie in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (t_tail(hi, df) > p_two_sided) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw ComputationError("t_critical: bracket search failed");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (t_tail(mid, df) > p_two_sided) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------

std::string to_string(CorrelationBand band) {
  switch (band) {
    case CorrelationBand::Negligible: return "negligible";
    case CorrelationBand::Weak: return "weak";
    case CorrelationBand::Moderate: return "moderate";
    case CorrelationBand::Strong: return "strong";
    case CorrelationBand::VeryStrong: return "very strong";
  }
  return "unknown";
}

CorrelationBand correlation_band(double rho) {
  const double r = std::fabs(rho);
  if (r < 0.1) return CorrelationBand::Negligible;
  if (r < 0.4) return CorrelationBand::Weak;
  if (r < 0.7) return CorrelationBand::Moderate;
  if (r < 0.9) return CorrelationBand::Strong;
  return CorrelationBand::VeryStrong;
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 (0-based) share ranks i+1..j
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t m = i; m < j; ++m) ranks[order[m]] = shared;
    i = j;
  }
  return ranks;
}

Real pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: needs at least 2 pairs");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return Real::undefined("zero variance");
  return Real::ok(std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0));
}

Outcome<CorrelationResult> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(
        fmt::format("spearman: length mismatch ({} vs {})", x.size(), y.size()));
  }
  if (x.size() < 2) throw std::invalid_argument("spearman: needs at least 2 pairs");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const Real r = pearson(rx, ry);
  if (!r) return Outcome<CorrelationResult>::undefined(r.reason());
  return Outcome<CorrelationResult>::ok({*r, x.size(), correlation_band(*r)});
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> independent_columns(const Eigen::MatrixXd& X, double tolerance) {
  const Eigen::Index n = X.rows();
  std::vector<Eigen::VectorXd> basis;
  if (n > 0) basis.push_back(Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n))));
  std::vector<std::size_t> kept;
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    Eigen::VectorXd v = X.col(j);
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    // two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) v -= q.dot(v) * q;
    }
    const double norm = v.norm();
    if (norm <= tolerance * norm0 || norm <= tolerance) continue;
    basis.push_back(v / norm);
    kept.push_back(static_cast<std::size_t>(j));
  }
  return kept;
}

RegressionResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = static_cast<std::size_t>(X.rows());
  const auto k = static_cast<std::size_t>(X.cols());
  if (static_cast<std::size_t>(y.size()) != n) {
    throw std::invalid_argument(fmt::format("ols: X has {} rows but y has {}", n, y.size()));
  }
  if (n <= k + 1) {
    throw ComputationError(
        fmt::format("ols: need n > k + 1 observations (n = {}, k = {})", n, k));
  }
  Eigen::MatrixXd A(X.rows(), X.cols() + 1);
  A.col(0).setOnes();
  A.rightCols(X.cols()) = X;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(kRankTolerance);
  if (static_cast<std::size_t>(qr.rank()) < k + 1) {
    const auto kept = independent_columns(X);
    std::vector<std::size_t> dependent;
    std::size_t next = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (next < kept.size() && kept[next] == j) {
        ++next;
      } else {
        dependent.push_back(j);
      }
    }
    std::string list;
    for (auto c : dependent) list += (list.empty() ? "" : ", ") + std::to_string(c);
    throw RankDeficientError(
        fmt::format("ols: design is rank deficient (rank {} of {}); dependent predictor "
                    "columns: [{}]",
                    qr.rank(), k + 1, list),
        std::move(dependent));
  }

  const Eigen::VectorXd beta = qr.solve(y);
  const Eigen::VectorXd residual = y - A * beta;
  const double rss = residual.squaredNorm();
  const double y_mean = y.mean();
  const double tss = (y.array() - y_mean).matrix().squaredNorm();
  if (tss == 0.0) throw ComputationError("ols: response has zero variance");

  const double df_resid = static_cast<double>(n - k - 1);
  const double sigma2 = rss / df_resid;

  // (A'A)^{-1} = P R^{-1} R^{-T} P'
  const Eigen::Index p = A.cols();
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd R_inv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::MatrixXd permuted = R_inv * R_inv.transpose();
  const auto& perm = qr.colsPermutation();
  const Eigen::MatrixXd cov_unscaled = perm * permuted * perm.transpose();

  RegressionResult out;
  out.n = n;
  out.k = k;
  out.intercept = beta(0);
  out.r_squared = std::clamp(1.0 - rss / tss, 0.0, 1.0);
  out.adjusted_r_squared =
      1.0 - (1.0 - out.r_squared) * static_cast<double>(n - 1) / df_resid;
  for (std::size_t j = 0; j < k; ++j) {
    const auto idx = static_cast<Eigen::Index>(j + 1);
    const double coef = beta(idx);
    const double se = std::sqrt(std::max(0.0, sigma2 * cov_unscaled(idx, idx)));
    double t = 0.0;
    double p_value = 1.0;
    if (se > 0.0) {
      t = coef / se;
      p_value = t_tail(t, df_resid);
    } else if (coef != 0.0) {
      t = coef > 0.0 ? kInf : -kInf;
      p_value = 0.0;
    }
    out.coefficients.push_back(coef);
    out.std_errors.push_back(se);
    out.t_values.push_back(t);
    out.p_values.push_back(p_value);
  }
  return out;
}

// ---------------------------------------------------------------------------

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw std::invalid_argument("one_way_anova: needs at least 2 groups");
  std::size_t total = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  AnovaResult out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      throw std::invalid_argument(fmt::format("one_way_anova: group {} is empty", g));
    }
    total += groups[g].size();
    out.group_sizes.push_back(groups[g].size());
    out.group_means.push_back(mean(groups[g]));
    for (double v : groups[g]) {
      sum += v;
      sum_sq += v * v;
    }
  }
  const std::size_t k = groups.size();
  if (total <= k) {
    throw std::invalid_argument(
        fmt::format("one_way_anova: total N ({}) must exceed the number of groups ({})", total,
                    k));
  }
  const double grand = sum / static_cast<double>(total);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (std::size_t g = 0; g < k; ++g) {
    const double d = out.group_means[g] - grand;
    ss_between += static_cast<double>(groups[g].size()) * d * d;
    for (double v : groups[g]) {
      const double e = v - out.group_means[g];
      ss_within += e * e;
    }
  }
  out.df_between = static_cast<double>(k - 1);
  out.df_within = static_cast<double>(total - k);
  const double tolerance = 64.0 * std::numeric_limits<double>::epsilon() * sum_sq;
  if (ss_between + ss_within <= tolerance) {
    out.f_statistic = 0.0;
    out.p_value = 1.0;
    out.degenerate = true;
    out.note = "all values identical";
    return out;
  }
  if (ss_within <= tolerance) {
    out.f_statistic = kInf;
    out.p_value = 0.0;
    out.degenerate = true;
    out.note = "zero within-group variance";
    return out;
  }
  out.f_statistic = (ss_between / out.df_between) / (ss_within / out.df_within);
  out.p_value = f_upper_tail(out.f_statistic, out.df_between, out.df_within);
  return out;
}

// ---------------------------------------------------------------------------

double two_sample_power(std::size_t n_per_group, double alpha, double cohens_d) {
  if (n_per_group < 2) throw std::invalid_argument("two_sample_power: n must be at least 2");
  const double df = 2.0 * static_cast<double>(n_per_group) - 2.0;
  const double ncp = cohens_d * std::sqrt(static_cast<double>(n_per_group) / 2.0);
  const double crit = t_critical(alpha, df);
  const boost::math::non_central_t dist(df, ncp);
  return boost::math::cdf(boost::math::complement(dist, crit)) + boost::math::cdf(dist, -crit);
}

std::size_t min_sample_size(double alpha, double power, double cohens_d) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("min_sample_size: alpha");
  if (!(power > 0.0 && power < 1.0)) throw std::invalid_argument("min_sample_size: power");
  if (!(cohens_d > 0.0)) throw std::invalid_argument("min_sample_size: cohens_d");

  const boost::math::normal standard;
  const double z_alpha = boost::math::quantile(standard, 1.0 - alpha / 2.0);
  const double z_power = boost::math::quantile(standard, power);
  const double approx = 2.0 * std::pow((z_alpha + z_power) / cohens_d, 2.0);
  constexpr std::size_t kMaxN = 100'000'000;
  auto n = static_cast<std::size_t>(std::max(2.0, std::floor(approx)));
  while (n > 2 && two_sample_power(n - 1, alpha, cohens_d) >= power) --n;
  while (two_sample_power(n, alpha, cohens_d) < power) {
    if (++n > kMaxN) throw ComputationError("min_sample_size: did not converge");
  }
  return n;
}

// ---------------------------------------------------------------------------

double mean(std::span<const double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace gam::stats
