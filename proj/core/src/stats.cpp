#include "qbound/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbound {

namespace {
constexpr double kZ95 = 1.959963984540054;
}

const char* weighting_name(Weighting w) {
  return w == Weighting::time_average ? "time-average" : "customer-average";
}

StationaryEstimate batch_means(std::span<const double> batch_values,
                               std::int64_t effective_samples) {
  if (batch_values.empty()) throw std::invalid_argument("batch_means: no batches");
  const int b = static_cast<int>(batch_values.size());
  double mean = 0.0;
  for (double v : batch_values) mean += v;
  mean /= b;
  double ss = 0.0;
  for (double v : batch_values) ss += (v - mean) * (v - mean);
  const double se = b > 1 ? std::sqrt(ss / (b - 1) / b) : 0.0;
  return {mean, kZ95 * se, b, effective_samples};
}

TailCurve estimate_tail(std::span<const double> samples,
                        const std::vector<double>& grid, Weighting weighting) {
  if (samples.empty()) throw std::invalid_argument("estimate_tail: empty sample set");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("estimate_tail: grid must be sorted ascending");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  TailCurve curve;
  curve.grid = grid;
  curve.weighting = weighting;
  curve.survival.reserve(grid.size());
  curve.ci_half_widths.reserve(grid.size());
  for (double level : grid) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), level);
    const double p = static_cast<double>(sorted.end() - it) / n;
    curve.survival.push_back(p);
    curve.ci_half_widths.push_back(kZ95 * std::sqrt(p * (1.0 - p) / n));
  }
  return curve;
}

double ks_statistic_exponential(std::vector<double> samples, double mean) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
  if (mean <= 0.0) throw std::invalid_argument("ks_statistic: mean must be positive");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = 1.0 - std::exp(-samples[i] / mean);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ols_slope: need two equal-length series");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace qbound
