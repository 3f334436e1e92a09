#include "qbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qbound {

namespace {

double c1_exp10(double r) {
  return r * (120.0 + 32.0 * std::log10(r) - 12.0 * std::log10(r - 2.0));
}

double c2_exp10(double r) {
  return c1_exp10(r) + r * (1.0 + std::log10(r) - std::log10(r - 2.0));
}

void check_r(double r) {
  if (!(r > 2.0)) throw std::domain_error("bounds: moment order r must exceed 2");
}

void check_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("bounds: unstable queue, need 0 < rho < 1");
}

}  // namespace

void MomentSummary::validate() const {
  check_r(r);
  if (!(mS >= 1.0 && mA >= 1.0))
    throw std::domain_error("bounds: normalized moments must be >= 1");
  if (n < 1) throw std::domain_error("bounds: need at least one server");
  check_rho(rho);
  if (!(mean_interarrival > 0.0))
    throw std::domain_error("bounds: mean interarrival must be positive");
}

UniversalConstants universal_constants(double r) {
  check_r(r);
  return {LogScalar::from_exp10(c1_exp10(r)), LogScalar::from_exp10(c2_exp10(r))};
}

KingmanBound kingman_single(double cA2, double cS2, double rho,
                            double mean_interarrival) {
  if (cA2 < 0.0 || cS2 < 0.0)
    throw std::domain_error("kingman_single: variances must be nonnegative");
  check_rho(rho);
  if (!(mean_interarrival > 0.0))
    throw std::domain_error("kingman_single: mean interarrival must be positive");
  const double queue = 0.5 * (cA2 + rho * rho * cS2) / (1.0 - rho);
  return {LogScalar::from_value(queue),
          LogScalar::from_value(mean_interarrival * queue)};
}

LogScalar cyclic_multiserver(double cA2, double cS2, int n, double rho) {
  if (cA2 < 0.0 || cS2 < 0.0)
    throw std::domain_error("cyclic_multiserver: variances must be nonnegative");
  if (n < 1) throw std::domain_error("cyclic_multiserver: need at least one server");
  check_rho(rho);
  return LogScalar::from_value(0.5 * (cA2 + n * cS2) / (1.0 - rho));
}

LogScalar main_tail_bound(const MomentSummary& m, double x) {
  m.validate();
  if (!(x > 0.0)) throw std::domain_error("main_tail_bound: level x must be positive");
  const double e = c1_exp10(m.r) + 3.0 * std::log10(m.mS * m.mA) -
                   0.5 * m.r * std::log10(x);
  return LogScalar::from_exp10(e);
}

LogScalar main_sspd_bound(const MomentSummary& m) {
  m.validate();
  const double base = m.n * (1.0 - m.rho) * (1.0 - m.rho);
  const double e = c1_exp10(m.r) + 3.0 * std::log10(m.mS * m.mA) -
                   0.5 * m.r * std::log10(base);
  return LogScalar::from_exp10(e);
}

MeanBounds mean_bounds(const MomentSummary& m) {
  m.validate();
  const double e = c2_exp10(m.r) + 3.0 * std::log10(m.mS * m.mA) -
                   std::log10(1.0 - m.rho);
  return {LogScalar::from_exp10(e),
          LogScalar::from_exp10(e + std::log10(m.mean_interarrival))};
}

LogScalar refined_mean_bound(const MomentSummary& m) {
  const MeanBounds base = mean_bounds(m);
  const double corr = m.n * (1.0 - m.rho) * (1.0 - m.rho);
  return LogScalar::from_exp10(base.queue_mean.exp10() -
                               (0.5 * m.r - 1.0) * std::log10(corr));
}

LogScalar higher_moment_bound(const MomentSummary& m, double z) {
  m.validate();
  if (!(z >= 1.0 && z < 0.5 * m.r))
    throw std::domain_error(
        "higher_moment_bound: coefficient diverges, need 1 <= z < r/2");
  const double e = m.r * std::log10(10.0 * m.r * z / (m.r - 2.0 * z)) +
                   c1_exp10(m.r) + 3.0 * std::log10(m.mS * m.mA) -
                   z * std::log10(1.0 - m.rho);
  return LogScalar::from_exp10(e);
}

HalfinWhittBounds halfin_whitt_bounds(double r, double mS, double mA, double B,
                                      double x, double z, std::optional<int> n) {
  check_r(r);
  if (!(mS >= 1.0 && mA >= 1.0))
    throw std::domain_error("halfin_whitt_bounds: normalized moments must be >= 1");
  if (!(B > 0.0)) throw std::domain_error("halfin_whitt_bounds: need B > 0");
  if (!(x > 0.0)) throw std::domain_error("halfin_whitt_bounds: need x > 0");
  if (!(z >= 1.0 && z < 0.5 * r))
    throw std::domain_error("halfin_whitt_bounds: need 1 <= z < r/2");
  if (n && !(static_cast<double>(*n) > B * B))
    throw std::domain_error("halfin_whitt_bounds: need n > B^2");
  const double lb = std::log10(B);
  const double base = c1_exp10(r) + 3.0 * std::log10(mS * mA);
  HalfinWhittBounds out;
  out.tail = LogScalar::from_exp10(base - 0.5 * r * (lb + std::log10(x)));
  out.sspd = LogScalar::from_exp10(base - r * lb);
  out.normalized_mean =
      LogScalar::from_exp10(c2_exp10(r) + 3.0 * std::log10(mS * mA) - (r - 1.0) * lb);
  out.moment = LogScalar::from_exp10(
      r * std::log10(10.0 * r * z / (r - 2.0 * z)) + base - 0.5 * r * lb);
  return out;
}

ThetaChoice default_theta(double ES, double ES2) {
  if (!(ES > 0.0)) throw std::domain_error("default_theta: need E[S] > 0");
  if (ES2 < ES * ES * (1.0 - 1e-12))
    throw std::domain_error("default_theta: invalid moments, E[S^2] < E[S]^2");
  return {ES / (2.0 * ES2), 4.0 * ES2};
}

void ConditionalParams::validate() const {
  if (n_prime < 1)
    throw std::domain_error("conditional_sup_tail: n' must be a positive integer");
  if (!(mu_A > 0.0 && mu_A < n_prime))
    throw std::domain_error("conditional_sup_tail: need 0 < mu_A < n'");
  if (!(C1 > 0.0 && C2 > 0.0 && C3 > 0.0))
    throw std::domain_error("conditional_sup_tail: constants must be positive");
  if (!(r1 > s1)) throw std::domain_error("conditional_sup_tail: need r1 > s1");
  if (!(s1 > 1.0)) throw std::domain_error("conditional_sup_tail: need s1 > 1");
  if (!(r3 > s3)) throw std::domain_error("conditional_sup_tail: need r3 > s3");
  if (!(s3 > 1.0)) throw std::domain_error("conditional_sup_tail: need s3 > 1");
  if (!(r2 > 2.0)) throw std::domain_error("conditional_sup_tail: need r2 > 2");
}

double ConditionalParams::mu_A_nprime() const {
  return std::max(0.5 * n_prime, mu_A);
}

LogScalar conditional_sup_tail(const ConditionalParams& p, double x) {
  p.validate();
  if (!(x >= 16.0)) throw std::domain_error("conditional_sup_tail: need x >= 16");
  const double rsum = p.r1 + p.r2 + p.r3;
  const double denom =
      (p.s1 - 1.0) * (p.s3 - 1.0) * (p.r1 - p.s1) * (p.r3 - p.s3) * (p.r2 - 2.0);
  const double pref_exp10 =
      (rsum + 1.0) * (6.0 + 5.0 * std::log10(rsum) - std::log10(denom)) +
      std::log10(1.0 + p.C1) + std::log10(1.0 + p.C2) + std::log10(1.0 + p.C3);

  const double np = p.n_prime;
  const double gap = np - p.mu_A_nprime();
  const double lx = std::log10(x);
  const double lnp = std::log10(np);
  const double lgap = std::log10(gap);
  const LogScalar term1 = LogScalar::from_exp10(
      0.5 * p.r1 * lnp - p.s1 * lgap - (p.r1 - p.s1) * lx);
  const LogScalar term2 = LogScalar::from_exp10(
      0.5 * p.r2 * lnp - 0.5 * p.r2 * lgap - 0.5 * p.r2 * lx);
  const LogScalar term3 = LogScalar::from_exp10(
      -p.s3 * lgap + p.r3 * lnp - (p.r3 - p.s3) * std::log10(p.mu_A_nprime()) -
      (p.r3 - p.s3) * lx);
  return LogScalar::from_exp10(pref_exp10) * (term1 + term2 + term3);
}

LogScalar supremum_tail_explicit(double r, double ES_r, double EA_r_normalized,
                                 double rho_nprime, double z) {
  check_r(r);
  if (!(ES_r >= 1.0 && EA_r_normalized >= 1.0))
    throw std::domain_error("supremum_tail_explicit: normalized moments must be >= 1");
  check_rho(rho_nprime);
  if (!(z > 0.0)) throw std::domain_error("supremum_tail_explicit: need z > 0");
  const double e = 3.0 * std::log10(ES_r) + std::log10(EA_r_normalized) +
                   4.0 * r * (26.0 + 8.0 * std::log10(r) - 3.0 * std::log10(r - 2.0)) -
                   0.5 * r * std::log10(z * (1.0 - rho_nprime));
  return LogScalar::from_exp10(e);
}

}  // namespace qbound
