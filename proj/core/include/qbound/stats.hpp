#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qbound {

/// Point estimate of a steady-state quantity with a 95% half-width.
struct StationaryEstimate {
  double point = 0.0;
  double ci_half_width = 0.0;
  int batches = 0;
  std::int64_t effective_samples = 0;
};

enum class Weighting { time_average, customer_average };

const char* weighting_name(Weighting w);

/// Empirical survival function on a grid of levels, with per-level
/// half-widths.  Survival is nonincreasing along the grid by construction.
struct TailCurve {
  std::vector<double> grid;
  std::vector<double> survival;
  std::vector<double> ci_half_widths;
  Weighting weighting = Weighting::customer_average;
};

/// Mean and 95% half-width from per-batch means.
StationaryEstimate batch_means(std::span<const double> batch_values,
                               std::int64_t effective_samples);

/// Survival estimates over equally weighted samples with binomial
/// half-widths.  Grid must be sorted ascending; samples must be nonempty.
TailCurve estimate_tail(std::span<const double> samples,
                        const std::vector<double>& grid, Weighting weighting);

/// One-sample Kolmogorov-Smirnov statistic against Exponential(mean).
double ks_statistic_exponential(std::vector<double> samples, double mean);

/// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qbound
