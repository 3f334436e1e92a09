#include "qbound/renewal_moments.hpp"

#include <cmath>
#include <stdexcept>

namespace qbound {

namespace {

// Number of renewals in (0, t], right-continuous at t.
std::int64_t count_renewals(const Distribution& d, double t, bool equilibrium,
                            RngStream& rng) {
  double cum = equilibrium ? d.equilibrium_sample(rng) : d.sample(rng);
  std::int64_t n = 0;
  while (cum <= t) {
    ++n;
    cum += d.sample(rng);
  }
  return n;
}

StationaryEstimate summarize(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double se = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return {mean, 1.959963984540054 * se, static_cast<int>(xs.size()),
          static_cast<std::int64_t>(xs.size())};
}

void check_common(int reps, double t) {
  if (reps < 2) throw std::invalid_argument("renewal_moments: need reps >= 2");
  if (!(t > 0.0)) throw std::invalid_argument("renewal_moments: need t > 0");
}

}  // namespace

StationaryEstimate estimate_pooled_moment(const Distribution& d, int k, double t,
                                          double r, bool equilibrium, int reps,
                                          std::uint64_t seed) {
  check_common(reps, t);
  if (k < 1) throw std::invalid_argument("estimate_pooled_moment: need k >= 1");
  const double mu = 1.0 / d.mean();
  std::vector<double> xs(reps);
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rng(seed, static_cast<std::uint64_t>(rep));
    std::int64_t total = 0;
    for (int i = 0; i < k; ++i) total += count_renewals(d, t, equilibrium, rng);
    xs[rep] = std::pow(std::fabs(static_cast<double>(total) - k * mu * t), r);
  }
  return summarize(xs);
}

StationaryEstimate estimate_partial_sum_moment(const Distribution& d, int k,
                                               double r, int reps,
                                               std::uint64_t seed) {
  if (reps < 2) throw std::invalid_argument("renewal_moments: need reps >= 2");
  if (k < 1) throw std::invalid_argument("estimate_partial_sum_moment: need k >= 1");
  const double mu = 1.0 / d.mean();
  std::vector<double> xs(reps);
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rng(seed, static_cast<std::uint64_t>(rep));
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += d.sample(rng);
    xs[rep] = std::pow(std::fabs(static_cast<double>(k) - mu * sum), r);
  }
  return summarize(xs);
}

StationaryEstimate estimate_count_moment(const Distribution& d, double t,
                                         double p, CountStat stat,
                                         bool equilibrium, int reps,
                                         std::uint64_t seed) {
  check_common(reps, t);
  const double mu = 1.0 / d.mean();
  std::vector<double> xs(reps);
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rng(seed, static_cast<std::uint64_t>(rep));
    const double n = static_cast<double>(count_renewals(d, t, equilibrium, rng));
    switch (stat) {
      case CountStat::raw: xs[rep] = std::pow(n, p); break;
      case CountStat::raw_plus_one: xs[rep] = std::pow(n + 1.0, p); break;
      case CountStat::centered_abs: xs[rep] = std::pow(std::fabs(n - mu * t), p); break;
    }
  }
  return summarize(xs);
}

}  // namespace qbound
