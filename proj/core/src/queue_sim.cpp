#include "qbound/queue_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace qbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kArrivalStream = 0;
constexpr std::uint64_t kServiceStream = 1;

// Per-batch time-in-state histogram over integer queue lengths.
struct StateHistogram {
  std::vector<double> time_at;
  double total = 0.0;

  void add(int state, double dt) {
    if (state >= static_cast<int>(time_at.size())) time_at.resize(state + 1, 0.0);
    time_at[state] += dt;
    total += dt;
  }
  // Fraction of time at or above `level`.
  double survival(double level) const {
    if (total <= 0.0) return 0.0;
    double acc = 0.0;
    const int lo = level <= 0.0 ? 0 : static_cast<int>(std::ceil(level));
    for (std::size_t s = lo; s < time_at.size(); ++s) acc += time_at[s];
    return acc / total;
  }
};

}  // namespace

QueueSpec::QueueSpec(Distribution arrival_, Distribution service_, int servers_,
                     std::string id_)
    : arrival(std::move(arrival_)), service(std::move(service_)),
      servers(servers_), id(std::move(id_)) {
  if (servers < 1) throw std::invalid_argument("QueueSpec: need at least one server");
  if (!(rho() < 1.0))
    throw std::invalid_argument("QueueSpec: unstable, need mu_A < n mu_S");
  if (id.empty()) {
    id = arrival.describe() + "/" + service.describe() + "/" +
         std::to_string(servers);
  }
}

void SimConfig::validate() const {
  if (batch_count < 30) throw std::invalid_argument("SimConfig: need >= 30 batches");
  if (total_arrivals < 10 * static_cast<std::int64_t>(batch_count))
    throw std::invalid_argument("SimConfig: need total_arrivals >= 10*batch_count");
  if (!(warmup_fraction >= 0.0 && warmup_fraction <= 0.5))
    throw std::invalid_argument("SimConfig: warmup_fraction must lie in [0, 0.5]");
}

EventSimResult run_event_sim(const QueueSpec& q, const SimConfig& cfg) {
  cfg.validate();
  RngStream arr_rng(cfg.master_seed, kArrivalStream);
  RngStream svc_rng(cfg.master_seed, kServiceStream);

  const std::int64_t warmup =
      static_cast<std::int64_t>(cfg.warmup_fraction * cfg.total_arrivals);
  const std::int64_t per_batch = (cfg.total_arrivals - warmup) / cfg.batch_count;
  const std::int64_t end_arrival = warmup + per_batch * cfg.batch_count;

  std::priority_queue<double, std::vector<double>, std::greater<>> departures;
  std::int64_t waiting = 0;
  std::int64_t arrivals_seen = 0;
  double now = 0.0;
  double next_arrival = q.arrival.sample(arr_rng);

  std::vector<StateHistogram> batches_L(cfg.batch_count);
  std::vector<StateHistogram> batches_Q(cfg.batch_count);
  int batch = -1;  // -1 means warming up

  while (arrivals_seen < end_arrival) {
    const double next_departure = departures.empty() ? kInf : departures.top();
    const bool is_departure = next_departure <= next_arrival;
    const double t_event = is_departure ? next_departure : next_arrival;
    const double dt = t_event - now;

    if (batch >= 0 && dt > 0.0) {
      batches_L[batch].add(static_cast<int>(waiting), dt);
      batches_Q[batch].add(static_cast<int>(waiting + departures.size()), dt);
    }
    now = t_event;

    if (is_departure) {
      departures.pop();
      if (waiting > 0) {
        --waiting;
        departures.push(now + q.service.sample(svc_rng));
      }
    } else {
      ++arrivals_seen;
      if (static_cast<int>(departures.size()) < q.servers) {
        departures.push(now + q.service.sample(svc_rng));
      } else {
        ++waiting;
      }
      next_arrival = now + q.arrival.sample(arr_rng);
      if (arrivals_seen >= warmup) {
        const std::int64_t measured = arrivals_seen - warmup;
        const std::int64_t b = measured / per_batch;
        batch = static_cast<int>(std::min<std::int64_t>(b, cfg.batch_count - 1));
      }
    }
  }

  EventSimResult out;
  std::vector<double> l_means(cfg.batch_count), delay_fracs(cfg.batch_count);
  double total_time = 0.0;
  for (int b = 0; b < cfg.batch_count; ++b) {
    double weighted = 0.0;
    for (std::size_t s = 0; s < batches_L[b].time_at.size(); ++s)
      weighted += static_cast<double>(s) * batches_L[b].time_at[s];
    l_means[b] = batches_L[b].total > 0.0 ? weighted / batches_L[b].total : 0.0;
    delay_fracs[b] = batches_Q[b].survival(static_cast<double>(q.servers));
    total_time += batches_L[b].total;
  }
  const std::int64_t measured = end_arrival - warmup;
  out.queue_mean = batch_means(l_means, measured);
  out.sspd = batch_means(delay_fracs, measured);
  out.measured_time = total_time;

  out.queue_tail.grid = cfg.tail_grid;
  out.queue_tail.weighting = Weighting::time_average;
  std::vector<double> level_fracs(cfg.batch_count);
  for (double level : cfg.tail_grid) {
    for (int b = 0; b < cfg.batch_count; ++b)
      level_fracs[b] = batches_L[b].survival(level);
    const StationaryEstimate e = batch_means(level_fracs, measured);
    out.queue_tail.survival.push_back(e.point);
    out.queue_tail.ci_half_widths.push_back(e.ci_half_width);
  }
  return out;
}

KwResult run_kw(const QueueSpec& q, const SimConfig& cfg,
                std::vector<double>* collect_waits) {
  cfg.validate();
  RngStream arr_rng(cfg.master_seed, kArrivalStream);
  RngStream svc_rng(cfg.master_seed, kServiceStream);

  const std::int64_t warmup =
      static_cast<std::int64_t>(cfg.warmup_fraction * cfg.total_arrivals);
  const std::int64_t per_batch = (cfg.total_arrivals - warmup) / cfg.batch_count;
  const std::int64_t end_arrival = warmup + per_batch * cfg.batch_count;
  const int n = q.servers;

  std::vector<double> w(n, 0.0);  // sorted ascending
  std::vector<double> batch_sums(cfg.batch_count, 0.0);
  std::vector<std::vector<double>> level_counts(
      cfg.tail_grid.size(), std::vector<double>(cfg.batch_count, 0.0));

  for (std::int64_t k = 0; k < end_arrival; ++k) {
    const double wait = w[0];
    if (k >= warmup) {
      const int b = static_cast<int>(
          std::min<std::int64_t>((k - warmup) / per_batch, cfg.batch_count - 1));
      batch_sums[b] += wait;
      for (std::size_t g = 0; g < cfg.tail_grid.size(); ++g)
        if (wait >= cfg.tail_grid[g]) level_counts[g][b] += 1.0;
      if (collect_waits) collect_waits->push_back(wait);
    }
    // Smallest component takes the job and gains its service.
    w[0] += q.service.sample(svc_rng);
    int i = 0;
    while (i + 1 < n && w[i] > w[i + 1]) {
      std::swap(w[i], w[i + 1]);
      ++i;
    }
    const double a = q.arrival.sample(arr_rng);
    for (double& x : w) x = std::max(0.0, x - a);
  }

  KwResult out;
  std::vector<double> means(cfg.batch_count);
  for (int b = 0; b < cfg.batch_count; ++b)
    means[b] = batch_sums[b] / static_cast<double>(per_batch);
  out.wait_mean = batch_means(means, end_arrival - warmup);

  out.wait_tail.grid = cfg.tail_grid;
  out.wait_tail.weighting = Weighting::customer_average;
  std::vector<double> fracs(cfg.batch_count);
  for (std::size_t g = 0; g < cfg.tail_grid.size(); ++g) {
    for (int b = 0; b < cfg.batch_count; ++b)
      fracs[b] = level_counts[g][b] / static_cast<double>(per_batch);
    const StationaryEstimate e = batch_means(fracs, end_arrival - warmup);
    out.wait_tail.survival.push_back(e.point);
    out.wait_tail.ci_half_widths.push_back(e.ci_half_width);
  }
  return out;
}

}  // namespace qbound
