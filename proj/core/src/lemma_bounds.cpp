#include "qbound/lemma_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qbound::lemmas {

namespace {

constexpr double kLog10E = M_LOG10E;

void need(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

double l10(double v) { return std::log10(v); }

}  // namespace

LogScalar pooled_central_moment(double r, double ES_r, double theta, double gap,
                                double k, double t) {
  need(r >= 2.0, "pooled_central_moment: needs r >= 2");
  need(t >= 1.0, "pooled_central_moment: needs t >= 1");
  need(k >= 1.0, "pooled_central_moment: needs k >= 1");
  need(theta > 0.0 && gap > 0.0 && ES_r > 0.0, "pooled_central_moment: bad inputs");
  const double e = l10(ES_r) + theta * kLog10E +
                   (r + 2.0) * (8.0 + 3.0 * l10(r) + l10(gap)) +
                   0.5 * r * (l10(k) + l10(t));
  return LogScalar::from_exp10(e);
}

LogScalar renewal_central_moment(double r, double ES_r, double theta, double gap,
                                 double t) {
  need(r >= 2.0, "renewal_central_moment: needs r >= 2");
  need(t >= 1.0, "renewal_central_moment: needs t >= 1");
  need(theta > 0.0 && gap > 0.0 && ES_r > 0.0, "renewal_central_moment: bad inputs");
  const double e = theta * kLog10E + l10(ES_r) +
                   (r + 1.0) * (5.0 + 2.0 * l10(r) + l10(gap)) + 0.5 * r * l10(t);
  return LogScalar::from_exp10(e);
}

LogScalar equilibrium_central_moment(double r, double ES_r, double theta,
                                     double gap, double t) {
  need(r >= 2.0, "equilibrium_central_moment: needs r >= 2");
  need(t >= 1.0, "equilibrium_central_moment: needs t >= 1");
  need(theta > 0.0 && gap > 0.0 && ES_r > 0.0,
       "equilibrium_central_moment: bad inputs");
  const double e = theta * kLog10E + l10(ES_r) +
                   (r + 2.0) * (7.0 + 2.0 * l10(r) + l10(gap)) + 0.5 * r * l10(t);
  return LogScalar::from_exp10(e);
}

LogScalar count_moment_unit_time(double p, double theta, double gap) {
  need(p >= 1.0, "count_moment_unit_time: needs p >= 1");
  need(theta > 0.0 && gap > 0.0, "count_moment_unit_time: bad inputs");
  const double e = theta * kLog10E + (p + 2.0) * l10(24.0 * p * gap);
  return LogScalar::from_exp10(e);
}

LogScalar count_moment_grown(double p, double theta, double gap, double t) {
  need(p >= 1.0, "count_moment_grown: needs p >= 1");
  need(t >= 1.0, "count_moment_grown: needs t >= 1");
  need(theta > 0.0 && gap > 0.0, "count_moment_grown: bad inputs");
  const double e = theta * kLog10E + (p + 2.0) * l10(100.0 * p * gap) + p * l10(t);
  return LogScalar::from_exp10(e);
}

LogScalar count_time_scaling(double p, double t, double unit_time_moment) {
  need(p >= 1.0, "count_time_scaling: needs p >= 1");
  need(t >= 1.0, "count_time_scaling: needs t >= 1");
  need(unit_time_moment >= 1.0, "count_time_scaling: unit-time moment must be >= 1");
  return LogScalar::from_exp10(p * l10(2.0 * t) + l10(unit_time_moment));
}

LogScalar pooled_short_time_weak(double p, double theta, double gap, double k,
                                 double t) {
  need(p >= 2.0, "pooled_short_time_weak: needs p >= 2");
  need(t >= 0.0 && t <= 1.0, "pooled_short_time_weak: needs t in [0,1]");
  need(k >= 1.0, "pooled_short_time_weak: needs k >= 1");
  need(theta > 0.0 && gap > 0.0, "pooled_short_time_weak: bad inputs");
  const double kt = k * t;
  const double grow = kt > 0.0 ? std::max(l10(kt), p * l10(kt)) : -1e18;
  const double e =
      theta * kLog10E + (p + 2.0) * (3.0 + 3.0 * l10(p) + l10(gap)) + grow;
  return t == 0.0 ? LogScalar::zero() : LogScalar::from_exp10(e);
}

LogScalar pooled_short_time(double p, double theta, double gap, double k,
                            double t) {
  need(p >= 2.0, "pooled_short_time: needs p >= 2");
  need(t >= 0.0 && t <= 1.0, "pooled_short_time: needs t in [0,1]");
  need(k >= 1.0, "pooled_short_time: needs k >= 1");
  need(theta > 0.0 && gap > 0.0, "pooled_short_time: bad inputs");
  const double kt = k * t;
  const double grow = kt > 0.0 ? std::max(l10(kt), 0.5 * p * l10(kt)) : -1e18;
  const double e =
      theta * kLog10E + (p + 2.0) * (5.0 + 4.0 * l10(p) + l10(gap)) + grow;
  return t == 0.0 ? LogScalar::zero() : LogScalar::from_exp10(e);
}

LogScalar partial_sum_central_moment(double r, double EA_r_normalized, double k) {
  need(r >= 2.0, "partial_sum_central_moment: needs r >= 2");
  need(k >= 1.0, "partial_sum_central_moment: needs k >= 1");
  need(EA_r_normalized >= 1.0,
       "partial_sum_central_moment: normalized moment must be >= 1");
  const double e = r * l10(10.0 * r) + l10(EA_r_normalized) + 0.5 * r * l10(k);
  return LogScalar::from_exp10(e);
}

LogScalar iid_centered_sum_moment(double p, double E_abs_p, double k) {
  need(p >= 2.0, "iid_centered_sum_moment: needs p >= 2");
  need(k >= 1.0, "iid_centered_sum_moment: needs k >= 1");
  need(E_abs_p > 0.0, "iid_centered_sum_moment: moment must be positive");
  return LogScalar::from_exp10(p * l10(5.0 * p) + l10(E_abs_p) + 0.5 * p * l10(k));
}

LogScalar iid_nonneg_sum_moment(double p, double EX, double EX_p, double k) {
  need(p >= 1.0, "iid_nonneg_sum_moment: needs p >= 1");
  need(k >= 1.0, "iid_nonneg_sum_moment: needs k >= 1");
  need(EX > 0.0 && EX_p > 0.0, "iid_nonneg_sum_moment: moments must be positive");
  const double grow = std::max(p * l10(k * EX), l10(k * EX_p));
  return LogScalar::from_exp10(p * l10(2.0 * p) + grow);
}

LogScalar maximal_partial_sum(double v, double g, double C, double L,
                              double lambda) {
  need(g > 1.0, "maximal_partial_sum: needs gamma > 1");
  need(v >= g, "maximal_partial_sum: needs nu >= gamma");
  need(C > 0.0 && L >= 1.0 && lambda > 0.0, "maximal_partial_sum: bad inputs");
  const double e = (v + 1.0) * l10(6.0 * (v + 1.0) / (g - 1.0)) + g * l10(C * L) -
                   v * l10(lambda);
  return LogScalar::from_exp10(e);
}

LogScalar pooled_integer_max(double r1, double s1, double C1, double n_prime,
                             double k, double lambda) {
  need(s1 > 1.0, "pooled_integer_max: needs s1 > 1");
  need(r1 >= s1, "pooled_integer_max: needs r1 >= s1");
  need(C1 > 0.0 && n_prime >= 1.0 && k >= 1.0 && lambda > 0.0,
       "pooled_integer_max: bad inputs");
  const double e = (r1 + 1.0) * l10(6.0 * (r1 + 1.0) / (s1 - 1.0)) + l10(C1) +
                   0.5 * r1 * l10(n_prime) + s1 * l10(k) - r1 * l10(lambda);
  return LogScalar::from_exp10(e);
}

LogScalar pooled_interval_max(double r2, double C2, double n_prime, double t0,
                              double lambda) {
  need(r2 > 2.0, "pooled_interval_max: needs r2 > 2");
  need(t0 > 0.0 && t0 <= 1.0, "pooled_interval_max: needs t0 in (0,1]");
  need(lambda >= 2.0, "pooled_interval_max: needs lambda >= 2");
  need(C2 > 0.0 && n_prime >= 1.0, "pooled_interval_max: bad inputs");
  const double e = (r2 + 1.0) * l10(24.0 * (r2 + 1.0) / (r2 - 2.0)) + l10(C2) +
                   0.5 * r2 * l10(n_prime * t0) - r2 * l10(lambda);
  return LogScalar::from_exp10(e);
}

LogScalar stationary_sup_tail(double r1, double r2, double s, double H1,
                              double H2, double Z, double nu, double lambda) {
  need(r1 > s && s > 1.0, "stationary_sup_tail: needs r1 > s > 1");
  need(r2 > 2.0, "stationary_sup_tail: needs r2 > 2");
  need(Z >= 0.0, "stationary_sup_tail: needs Z >= 0");
  need(lambda >= 4.0 * Z, "stationary_sup_tail: needs lambda >= 4Z");
  need(H1 > 0.0 && H2 > 0.0 && nu > 0.0 && lambda > 0.0,
       "stationary_sup_tail: bad inputs");
  const double pref =
      l10(1.0 + 1.0 / (r1 - s)) + (r1 + r2 + 2.0) * l10(4.0);
  const LogScalar t1 = LogScalar::from_exp10(
      l10(H1) - s * l10(nu) - (r1 - s) * l10(lambda));
  const LogScalar t2 =
      LogScalar::from_exp10(l10(H2) - 0.5 * r2 * l10(lambda * nu));
  return LogScalar::from_exp10(pref) * (t1 + t2);
}

LogScalar discrete_sup_tail(double r3, double s3, double H3, double nu,
                            double lambda) {
  need(r3 > s3 && s3 >= 1.0, "discrete_sup_tail: needs r3 > s3 >= 1");
  need(H3 > 0.0 && nu > 0.0 && lambda > 0.0, "discrete_sup_tail: bad inputs");
  const double e = l10(16.0) + l10(H3) + r3 * l10(4.0) +
                   l10(1.0 + 1.0 / (r3 - s3)) - s3 * l10(nu) -
                   (r3 - s3) * l10(lambda);
  return LogScalar::from_exp10(e);
}

LogScalar pooled_alltime_tail(double r1, double r2, double s1, double C1,
                              double C2, double n_prime, double nu,
                              double lambda) {
  need(r1 > s1 && s1 > 1.0, "pooled_alltime_tail: needs r1 > s1 > 1");
  need(r2 > 2.0, "pooled_alltime_tail: needs r2 > 2");
  need(lambda >= 8.0, "pooled_alltime_tail: needs lambda >= 8");
  need(C1 > 0.0 && C2 > 0.0 && n_prime >= 1.0 && nu > 0.0,
       "pooled_alltime_tail: bad inputs");
  const double pref =
      (r1 + r2 + 2.0) *
      l10(100.0 * std::pow(r1 + r2, 3.0) / ((s1 - 1.0) * (r1 - s1) * (r2 - 2.0)));
  const LogScalar t1 = LogScalar::from_exp10(
      l10(C1) + 0.5 * r1 * l10(n_prime) - s1 * l10(nu) - (r1 - s1) * l10(lambda));
  const LogScalar t2 = LogScalar::from_exp10(
      l10(C2) + 0.5 * r2 * l10(n_prime) - 0.5 * r2 * l10(lambda * nu));
  return LogScalar::from_exp10(pref) * (t1 + t2);
}

LogScalar arrival_integer_max(double r3, double s3, double C3, double k,
                              double lambda) {
  need(s3 > 1.0, "arrival_integer_max: needs s3 > 1");
  need(r3 >= s3, "arrival_integer_max: needs r3 >= s3");
  need(C3 > 0.0 && k >= 1.0 && lambda > 0.0, "arrival_integer_max: bad inputs");
  const double e = (r3 + 1.0) * l10(6.0 * (r3 + 1.0) / (s3 - 1.0)) + l10(C3) +
                   s3 * l10(k) - r3 * l10(lambda);
  return LogScalar::from_exp10(e);
}

DiscreteReformulation arrival_discretize(double mu, double nu, double lambda) {
  need(mu > 0.0 && nu > 0.0 && lambda > 0.0, "arrival_discretize: bad inputs");
  return {nu / (mu + nu), lambda * mu / (mu + nu)};
}

LogScalar arrival_alltime_tail(double r3, double s3, double C3, double mu,
                               double nu, double lambda) {
  need(r3 > s3 && s3 > 1.0, "arrival_alltime_tail: needs r3 > s3 > 1");
  need(C3 > 0.0 && mu > 0.0 && nu > 0.0 && lambda > 0.0,
       "arrival_alltime_tail: bad inputs");
  const double e =
      (r3 + 1.0) * l10(1e3 * (r3 + 1.0) * (r3 + 1.0) / ((s3 - 1.0) * (r3 - s3))) +
      l10(C3) - s3 * l10(nu) + r3 * l10(mu + nu) - (r3 - s3) * l10(mu) -
      (r3 - s3) * l10(lambda);
  return LogScalar::from_exp10(e);
}

UnionSplit union_split(double r1, double r2, double r3, double s1, double s3,
                       double C1, double C2, double C3, double n_prime,
                       double mu_A, double x) {
  need(x > 2.0, "union_split: needs x > 2");
  need(n_prime >= 1.0 && mu_A > 0.0 && mu_A < n_prime, "union_split: needs 0 < mu_A < n'");
  const double mu = std::max(0.5 * n_prime, mu_A);
  UnionSplit out;
  out.drift = 0.5 * (n_prime - mu);
  out.arrival_level = 0.5 * x - 1.0;
  out.pooled_level = 0.5 * x;
  out.arrival_part =
      arrival_alltime_tail(r3, s3, C3, mu, out.drift, out.arrival_level);
  out.pooled_part =
      pooled_alltime_tail(r1, r2, s1, C1, C2, n_prime, out.drift, out.pooled_level);
  return out;
}

}  // namespace qbound::lemmas
