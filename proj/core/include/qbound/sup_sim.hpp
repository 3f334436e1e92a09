#pragma once

#include <cstdint>
#include <vector>

#include "qbound/distribution.hpp"
#include "qbound/stats.hpp"

namespace qbound {

struct SupremumConfig {
  int n_prime = 1;
  int reps = 10'000;
  double horizon_multiplier = 20.0;  // >= 5
  std::uint64_t master_seed = 1;
  double max_level = 20.0;  // largest tail level of interest

  void validate() const;
};

struct SupSamples {
  std::vector<int> values;       // per-replication finite-horizon suprema
  double truncation_diag = 0.0;  // fraction whose max moved in the last 10%
  double horizon = 0.0;
  int horizon_doublings = 0;
};

/// Finite-horizon supremum of A(t) - sum_{i<=n'} N_i(t), with A an
/// equilibrium renewal process (inter-event distribution `arrival`) and the
/// N_i i.i.d. equilibrium renewal processes (`service`).  The walk moves by
/// +-1 at event epochs only, so the supremum over [0,T] is exact over event
/// times.  The horizon T = multiplier * max_level / (n' mu_S - mu_A) doubles
/// automatically while more than 1% of replications are still improving
/// their maximum in the last tenth of the run.
SupSamples simulate_supremum(const Distribution& arrival,
                             const Distribution& service,
                             const SupremumConfig& cfg);

/// Survival estimates of the supremum over replications, binomial
/// half-widths.
TailCurve sup_tail_estimate(const SupSamples& s, const std::vector<double>& grid);

}  // namespace qbound
