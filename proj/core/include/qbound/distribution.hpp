#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbound/rng.hpp"

namespace qbound {

enum class Family {
  deterministic,
  exponential,
  erlang,
  gamma,
  uniform,
  hyperexponential,
  lognormal,
  weibull,
  pareto,
};

const char* family_name(Family f);

/// Parametric nonnegative distribution with sampling, real-order moments,
/// Laplace transform, and equilibrium (stationary-excess) sampling.
///
/// Instances are immutable and cheap to copy; samplers are pure functions
/// of (spec, stream state), so a spec may be shared across workers as long
/// as each worker owns its RngStream.
class Distribution {
 public:
  static Distribution deterministic(double value);
  static Distribution exponential(double rate);
  static Distribution erlang(int k, double mean);
  static Distribution gamma(double shape, double rate);
  static Distribution uniform(double lo, double hi);
  static Distribution hyperexponential(std::vector<double> weights,
                                       std::vector<double> rates);
  static Distribution lognormal(double mu, double sigma);
  static Distribution weibull(double shape, double scale);
  /// Classic Pareto on [scale, inf) with tail index `shape` (> 1 so the
  /// mean is finite).  E[X^r] is finite exactly for r < shape.
  static Distribution pareto(double shape, double scale);
  static Distribution pareto_with_mean(double shape, double mean);

  Family family() const { return family_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  /// Squared coefficient of variation Var[X mu_X].
  double scv() const { return variance_ / (mean_ * mean_); }
  /// Largest r with E[X^r] finite (exclusive for pareto, +inf otherwise).
  double moment_order_available() const;

  /// E[X^p] for real p >= 0; throws for p at/past the available order.
  double raw_moment(double p) const;
  /// E[(X mu_X)^p]; scale-invariant and >= 1 for p >= 1.
  double normalized_moment(double p) const;
  /// E[exp(-theta X)] for theta > 0; closed form where available, else
  /// quadrature to 1e-10 absolute.
  double laplace(double theta) const;

  double sample(RngStream& rng) const;
  /// Draw from the integrated-tail (equilibrium) distribution R(X),
  /// P(R > y) = (1/E[X]) int_y^inf P(X > z) dz.
  double equilibrium_sample(RngStream& rng) const;

  /// Distribution of c*X.
  Distribution scaled(double c) const;
  /// Rescaled copy with the requested mean.
  Distribution with_mean(double m) const;

  double pdf(double x) const;
  double survival(double x) const;

  /// Compact literal such as "erlang(k=2,mean=1)".
  std::string describe() const;
  std::string to_json_string() const;
  static Distribution from_json_string(const std::string& text);

 private:
  Distribution() = default;
  void finalize();
  double integrated_tail(double y) const;  // E[min(X, y)]

  Family family_ = Family::deterministic;
  double a_ = 0.0;  // value | rate | rate | shape | lo | -    | mu    | shape | shape
  double b_ = 0.0;  // -     | -    | -    | rate  | hi | -    | sigma | scale | scale
  int k_ = 0;       // erlang stage count
  std::vector<double> weights_;
  std::vector<double> rates_;
  std::vector<double> eq_weights_;  // hyperexponential equilibrium mixture
  double mean_ = 0.0;
  double variance_ = 0.0;
};

}  // namespace qbound
