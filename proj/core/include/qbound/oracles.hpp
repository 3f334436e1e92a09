#pragma once

namespace qbound {

struct ErlangC {
  double delay_prob = 0.0;
  double mean_queue = 0.0;
};

/// Exact M/M/n delay probability and mean queue length for offered load
/// a = lambda/mu, computed with the stable Erlang-B recurrence.
/// Requires a < n.
ErlangC erlang_c(int n, double a);

struct PollaczekKhinchine {
  double mean_wait = 0.0;
  double mean_queue = 0.0;
};

/// Exact M/G/1 mean wait and mean queue: E[W] = lambda E[S^2] / (2(1-rho)).
/// Requires rho = lambda * ES < 1.
PollaczekKhinchine pk_formula(double lambda, double ES, double ES2);

}  // namespace qbound
