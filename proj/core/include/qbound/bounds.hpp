#pragma once

#include <optional>

#include "qbound/log_scalar.hpp"

namespace qbound {

/// Moment inputs shared by the multi-server bounds: moment order r > 2,
/// normalized moments mS = E[(S muS)^r] and mA = E[(A muA)^r] (both >= 1
/// by Jensen), server count, traffic intensity, and E[A].
struct MomentSummary {
  double r = 3.0;
  double mS = 1.0;
  double mA = 1.0;
  int n = 1;
  double rho = 0.5;
  double mean_interarrival = 1.0;

  void validate() const;
};

struct UniversalConstants {
  LogScalar c1;  // (10^120 r^32 (r-2)^-12)^r
  LogScalar c2;  // (10 r / (r-2))^r * c1
};

/// The two absolute constants of the tail and mean bounds; exact in
/// exponent space: exp10(c1) = r (120 + 32 log10 r - 12 log10(r-2)).
UniversalConstants universal_constants(double r);

struct KingmanBound {
  LogScalar queue_mean;
  LogScalar wait_mean;
};

/// Classical single-server bound: E[L] <= (cA2 + rho^2 cS2)/2 * 1/(1-rho),
/// E[W] <= E[A] times the queue form.
KingmanBound kingman_single(double cA2, double cS2, double rho,
                            double mean_interarrival);

/// Cyclic-routing multi-server bound (cA2 + n cS2)/2 * 1/(1-rho); the extra
/// factor n on the service variance is the price of universality.
LogScalar cyclic_multiserver(double cA2, double cS2, int n, double rho);

/// Tail of the queue length: P(L >= x/(1-rho)) <= C_{r,1} (mS mA)^3 x^{-r/2}.
LogScalar main_tail_bound(const MomentSummary& m, double x);

/// Steady-state probability of delay:
/// P(Q >= n) <= C_{r,1} (mS mA)^3 (n (1-rho)^2)^{-r/2}.
LogScalar main_sspd_bound(const MomentSummary& m);

struct MeanBounds {
  LogScalar queue_mean;  // C_{r,2} (mS mA)^3 / (1-rho)
  LogScalar wait_mean;   // E[A] times the queue bound
};

MeanBounds mean_bounds(const MomentSummary& m);

/// Mean bound with the extra factor (n (1-rho)^2)^{-(r/2-1)}, which beats
/// 1/(1-rho) whenever n (1-rho)^2 > 1.
LogScalar refined_mean_bound(const MomentSummary& m);

/// E[L^z] <= (10 r z/(r-2z))^r C_{r,1} (mS mA)^3 (1/(1-rho))^z for
/// z in [1, r/2); throws at and beyond the pole.
LogScalar higher_moment_bound(const MomentSummary& m, double z);

struct HalfinWhittBounds {
  LogScalar tail;             // P(L >= x sqrt(n)) bound
  LogScalar sspd;             // proportional to B^-r
  LogScalar normalized_mean;  // E[L/sqrt(n)] bound, B^-(r-1)
  LogScalar moment;           // E[(L/sqrt(n))^z] bound
};

/// Square-root-staffing forms with excess parameter B; moments must be the
/// normalized (unit-mean) ones.  When n is supplied, requires n > B^2.
HalfinWhittBounds halfin_whitt_bounds(double r, double mS, double mA, double B,
                                      double x, double z,
                                      std::optional<int> n = std::nullopt);

struct ThetaChoice {
  double theta;              // ES / (2 ES2)
  double laplace_gap_upper;  // 4 ES2 >= 1/(1 - E[exp(-theta S)]) at unit mean
};

/// Default transform point removing the 1/(1 - E[exp(-theta S)]) term.
ThetaChoice default_theta(double ES, double ES2);

/// Inputs of the conditional supremum tail bound: moment-growth constants
/// for the pooled-count and partial-sum processes, with strict orderings
/// r1 > s1 > 1, r3 > s3 > 1, r2 > 2 and 0 < mu_A < n' (mu_S normalized
/// to 1).
struct ConditionalParams {
  int n_prime = 1;
  double mu_A = 0.5;
  double C1 = 1.0, C2 = 1.0, C3 = 1.0;
  double r1 = 3.0, r2 = 3.0, r3 = 3.0;
  double s1 = 1.5, s3 = 1.5;

  void validate() const;
  /// max(n'/2, mu_A), the rate of the slowed arrival process.
  double mu_A_nprime() const;
};

/// Conditional bound on P(sup_t (A(t) - sum N_i(t)) >= x) for x >= 16.
LogScalar conditional_sup_tail(const ConditionalParams& p, double x);

/// Fully explicit supremum tail:
/// (E[S^r])^3 E[A^r] muA^r (10^26 r^8 (r-2)^-3)^{4r} (z(1-rho))^{-r/2},
/// with mu_S normalized to 1.  Valid for all z > 0 (below z=16 the value
/// is at least one).
LogScalar supremum_tail_explicit(double r, double ES_r, double EA_r_normalized,
                                 double rho_nprime, double z);

}  // namespace qbound
