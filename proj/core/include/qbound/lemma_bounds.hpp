#pragma once

#include "qbound/log_scalar.hpp"

namespace qbound::lemmas {

// Moment bounds for renewal counting processes and i.i.d. partial sums.
// Every transform-dependent bound takes the transform point `theta` and
// `gap` = 1/(1 - E[exp(-theta S)]) (or the 4 E[S^2] surrogate) explicitly,
// so callers choose between the exact and surrogate routes.

/// E[|sum_{i<=k} N_i(t) - k t|^r] for equilibrium processes and t >= 1:
/// E[S^r] e^theta (10^8 r^3 gap)^{r+2} k^{r/2} t^{r/2}.
LogScalar pooled_central_moment(double r, double ES_r, double theta,
                                double gap, double k, double t);

/// E[|N_o(t) - t|^r] for the ordinary process and t >= 1:
/// e^theta E[S^r] (10^5 r^2 gap)^{r+1} t^{r/2}.
LogScalar renewal_central_moment(double r, double ES_r, double theta,
                                 double gap, double t);

/// Equilibrium-process version of renewal_central_moment:
/// e^theta E[S^r] (10^7 r^2 gap)^{r+2} t^{r/2}.
LogScalar equilibrium_central_moment(double r, double ES_r, double theta,
                                     double gap, double t);

/// E[N_o(1)^p] <= e^theta (24 p gap)^{p+2}.
LogScalar count_moment_unit_time(double p, double theta, double gap);

/// E[(N_o(t)+1)^p] <= e^theta (100 p gap)^{p+2} t^p for t >= 1.
LogScalar count_moment_grown(double p, double theta, double gap, double t);

/// E[(N_o(t)+1)^p] <= (2t)^p E[(N_o(1)+1)^p] for t >= 1; the unit-time
/// moment is supplied by the caller.
LogScalar count_time_scaling(double p, double t, double unit_time_moment);

/// Weak small-t pooled bound, t in [0,1]:
/// e^theta (10^3 p^3 gap)^{p+2} max(kt, (kt)^p).
LogScalar pooled_short_time_weak(double p, double theta, double gap, double k,
                                 double t);

/// Sharp small-t pooled bound, t in [0,1]:
/// e^theta (10^5 p^4 gap)^{p+2} max(kt, (kt)^{p/2}).
LogScalar pooled_short_time(double p, double theta, double gap, double k,
                            double t);

/// E[|mu_A sum_{i<=k} A_i - k|^r] <= (10 r)^r E[A^r] mu_A^r k^{r/2}.
LogScalar partial_sum_central_moment(double r, double EA_r_normalized,
                                     double k);

/// Marcinkiewicz-Zygmund: E[|sum X_i|^p] <= (5p)^p E[|X|^p] k^{p/2} for
/// centered i.i.d. X_i with p >= 2.
LogScalar iid_centered_sum_moment(double p, double E_abs_p, double k);

/// Nonnegative i.i.d. sums, p >= 1:
/// E[(sum X_i)^p] <= (2p)^p max((k E[X])^p, k E[X^p]).
LogScalar iid_nonneg_sum_moment(double p, double EX, double EX_p, double k);

// Supremum machinery: maximal inequalities and all-time negative-drift
// tails for the arrival and pooled-departure processes.

/// Partial-sum maximal inequality: if P(|S_j - S_i| >= l) <= (C(j-i+1))^g l^-v
/// then P(max |S_i| >= l) <= (6(v+1)/(g-1))^{v+1} (C L)^g l^-v.
LogScalar maximal_partial_sum(double v, double g, double C, double L,
                              double lambda);

/// Pooled-count supremum over integer grids:
/// (6(r1+1)/(s1-1))^{r1+1} C1 n'^{r1/2} k^{s1} lambda^{-r1}.
LogScalar pooled_integer_max(double r1, double s1, double C1, double n_prime,
                             double k, double lambda);

/// Pooled-count supremum over intervals of length at most one, lambda >= 2:
/// (24(r2+1)/(r2-2))^{r2+1} C2 (n' t0)^{r2/2} lambda^{-r2}.
LogScalar pooled_interval_max(double r2, double C2, double n_prime, double t0,
                              double lambda);

/// Continuous-time stationary-increment tail, lambda >= 4Z:
/// (1 + 1/(r1-s)) 4^{r1+r2+2} (H1 nu^-s lambda^-(r1-s) + H2 (lambda nu)^{-r2/2}).
LogScalar stationary_sup_tail(double r1, double r2, double s, double H1,
                              double H2, double Z, double nu, double lambda);

/// Discrete-time stationary-increment tail, any lambda > 0:
/// 16 H3 4^{r3} (1 + 1/(r3-s3)) nu^{-s3} lambda^{-(r3-s3)}.
LogScalar discrete_sup_tail(double r3, double s3, double H3, double nu,
                            double lambda);

/// All-time pooled-count drift tail, lambda >= 8:
/// (100(r1+r2)^3/((s1-1)(r1-s1)(r2-2)))^{r1+r2+2}
///   (C1 n'^{r1/2} nu^{-s1} lambda^{-(r1-s1)} + C2 n'^{r2/2} (lambda nu)^{-r2/2}).
LogScalar pooled_alltime_tail(double r1, double r2, double s1, double C1,
                              double C2, double n_prime, double nu,
                              double lambda);

/// Arrival partial-sum supremum over integer grids:
/// (6(r3+1)/(s3-1))^{r3+1} C3 k^{s3} lambda^{-r3}.
LogScalar arrival_integer_max(double r3, double s3, double C3, double k,
                              double lambda);

struct DiscreteReformulation {
  double drift;  // nu / (mu + nu)
  double level;  // lambda mu / (mu + nu)
};

/// Exact reduction of the drifted arrival supremum to the discrete walk:
/// the continuous event P(sup_t (A(t) - mu t - nu t) >= lambda) equals the
/// discrete event at the returned drift and level.
DiscreteReformulation arrival_discretize(double mu, double nu, double lambda);

/// All-time arrival drift tail:
/// (10^3(r3+1)^2/((s3-1)(r3-s3)))^{r3+1}
///   C3 nu^{-s3} (mu+nu)^{r3} mu^{-(r3-s3)} lambda^{-(r3-s3)}.
LogScalar arrival_alltime_tail(double r3, double s3, double C3, double mu,
                               double nu, double lambda);

struct UnionSplit {
  LogScalar arrival_part;
  LogScalar pooled_part;
  double drift;          // (n' - mu_A_n')/2
  double arrival_level;  // x/2 - 1
  double pooled_level;   // x/2
};

/// Union-bound decomposition of the supremum tail at level x > 2 into the
/// arrival-side and pooled-side components, each evaluated with the
/// corresponding all-time tail bound.
UnionSplit union_split(double r1, double r2, double r3, double s1, double s3,
                       double C1, double C2, double C3, double n_prime,
                       double mu_A, double x);

}  // namespace qbound::lemmas
