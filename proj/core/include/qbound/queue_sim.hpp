#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbound/distribution.hpp"
#include "qbound/stats.hpp"

namespace qbound {

/// A stable FCFS GI/GI/n instance.  Construction rejects rho >= 1.
struct QueueSpec {
  QueueSpec(Distribution arrival_, Distribution service_, int servers_,
            std::string id_ = "");

  Distribution arrival;
  Distribution service;
  int servers;
  std::string id;

  double arrival_rate() const { return 1.0 / arrival.mean(); }
  double service_rate() const { return 1.0 / service.mean(); }
  double rho() const { return arrival_rate() / (servers * service_rate()); }
};

struct SimConfig {
  std::int64_t total_arrivals = 1'000'000;
  double warmup_fraction = 0.2;  // in [0, 0.5]
  int batch_count = 30;
  std::uint64_t master_seed = 1;
  std::vector<double> tail_grid;

  void validate() const;
};

struct EventSimResult {
  StationaryEstimate queue_mean;  // E[L], time average
  StationaryEstimate sspd;        // P(Q >= n), time average
  TailCurve queue_tail;           // P(L >= level), time average
  double measured_time = 0.0;
};

/// Event-driven simulation tracking (number in system, residual services).
/// Time-average estimates with batch-means half-widths; departures are
/// processed before arrivals at equal timestamps.
EventSimResult run_event_sim(const QueueSpec& q, const SimConfig& cfg);

struct KwResult {
  StationaryEstimate wait_mean;  // E[W], customer average
  TailCurve wait_tail;
};

/// Sorted-workload-vector recursion: arrival k waits the smallest
/// component, which then gains its service time, and the whole vector
/// drains by the next interarrival (clamped at zero).  Reduces to the
/// single-server Lindley recursion at n = 1.  When `collect_waits` is
/// given, post-warmup waits are appended to it.
KwResult run_kw(const QueueSpec& q, const SimConfig& cfg,
                std::vector<double>* collect_waits = nullptr);

}  // namespace qbound
