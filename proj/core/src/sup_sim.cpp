#include "qbound/sup_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbound {

void SupremumConfig::validate() const {
  if (n_prime < 1) throw std::invalid_argument("SupremumConfig: n' must be positive");
  if (reps < 1000) throw std::invalid_argument("SupremumConfig: need reps >= 1000");
  if (!(horizon_multiplier >= 5.0))
    throw std::invalid_argument("SupremumConfig: need horizon_multiplier >= 5");
  if (!(max_level >= 0.0))
    throw std::invalid_argument("SupremumConfig: max_level must be nonnegative");
}

namespace {

struct RepResult {
  int maximum;
  double time_of_max;
};

RepResult run_replication(const Distribution& arrival, const Distribution& service,
                          int n_prime, double horizon, RngStream& rng) {
  // Service clocks in a flat min-heap; the arrival clock is kept separate.
  std::vector<double> svc(n_prime);
  for (auto& t : svc) t = service.equilibrium_sample(rng);
  std::make_heap(svc.begin(), svc.end(), std::greater<>{});
  double next_arrival = arrival.equilibrium_sample(rng);

  int value = 0;
  int best = 0;
  double best_t = 0.0;
  for (;;) {
    const double next_service = svc.front();
    // Renewals drain the walk before a simultaneous arrival raises it.
    if (next_service <= next_arrival) {
      if (next_service > horizon) break;
      --value;
      std::pop_heap(svc.begin(), svc.end(), std::greater<>{});
      svc.back() = next_service + service.sample(rng);
      std::push_heap(svc.begin(), svc.end(), std::greater<>{});
    } else {
      if (next_arrival > horizon) break;
      ++value;
      if (value > best) {
        best = value;
        best_t = next_arrival;
      }
      next_arrival += arrival.sample(rng);
    }
  }
  return {best, best_t};
}

}  // namespace

SupSamples simulate_supremum(const Distribution& arrival,
                             const Distribution& service,
                             const SupremumConfig& cfg) {
  cfg.validate();
  const double mu_A = 1.0 / arrival.mean();
  const double mu_S = 1.0 / service.mean();
  const double drift = cfg.n_prime * mu_S - mu_A;
  if (!(drift > 0.0))
    throw std::invalid_argument("simulate_supremum: needs negative drift, mu_A < n' mu_S");

  double horizon = cfg.horizon_multiplier * std::max(cfg.max_level, 1.0) / drift;
  SupSamples out;
  for (int doubling = 0; doubling < 8; ++doubling) {
    out.values.assign(cfg.reps, 0);
    int late_movers = 0;
    for (int r = 0; r < cfg.reps; ++r) {
      RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(r));
      const RepResult res =
          run_replication(arrival, service, cfg.n_prime, horizon, rng);
      out.values[r] = res.maximum;
      if (res.maximum > 0 && res.time_of_max > 0.9 * horizon) ++late_movers;
    }
    out.truncation_diag = static_cast<double>(late_movers) / cfg.reps;
    out.horizon = horizon;
    out.horizon_doublings = doubling;
    if (out.truncation_diag < 0.01) break;
    horizon *= 2.0;
  }
  return out;
}

TailCurve sup_tail_estimate(const SupSamples& s, const std::vector<double>& grid) {
  std::vector<double> values(s.values.begin(), s.values.end());
  return estimate_tail(values, grid, Weighting::customer_average);
}

}  // namespace qbound
