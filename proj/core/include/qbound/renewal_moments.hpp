#pragma once

#include <cstdint>

#include "qbound/distribution.hpp"
#include "qbound/stats.hpp"

namespace qbound {

/// Monte Carlo estimate of E[|sum_{i<=k} N_i(t) - k mu t|^r] where the N_i
/// are i.i.d. renewal counting processes with inter-event distribution d;
/// `equilibrium` picks the first-interval law.  Counting is
/// right-continuous: a renewal exactly at t counts.
StationaryEstimate estimate_pooled_moment(const Distribution& d, int k, double t,
                                          double r, bool equilibrium, int reps,
                                          std::uint64_t seed);

/// Monte Carlo estimate of E[|k - mu sum_{i<=k} X_i|^r] for i.i.d. X_i ~ d.
StationaryEstimate estimate_partial_sum_moment(const Distribution& d, int k,
                                               double r, int reps,
                                               std::uint64_t seed);

enum class CountStat {
  raw,           // E[N(t)^p]
  raw_plus_one,  // E[(N(t)+1)^p]
  centered_abs,  // E[|N(t) - mu t|^p]
};

/// Monte Carlo estimate of a single renewal-count moment at time t.
StationaryEstimate estimate_count_moment(const Distribution& d, double t,
                                         double p, CountStat stat,
                                         bool equilibrium, int reps,
                                         std::uint64_t seed);

}  // namespace qbound
