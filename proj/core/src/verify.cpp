#include "qbound/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qbound {

namespace {
constexpr double kZ99 = 2.58;

std::string fmt_param(const char* key, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s=%.10g", key, v);
  return buf;
}
}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

VerificationRecord dominance_check(std::string check_id, const LogScalar& bound,
                                   const StationaryEstimate& est,
                                   bool probability_bound, std::string spec,
                                   std::string param, std::uint64_t seed) {
  VerificationRecord rec;
  rec.check_id = std::move(check_id);
  rec.spec = std::move(spec);
  rec.param = std::move(param);
  if (!bound.is_zero()) rec.bound_exp10 = bound.exp10();
  rec.estimate = est.point;
  rec.estimate_ci = est.ci_half_width;
  rec.seed = seed;
  if (probability_bound && !bound.is_zero() && bound.exp10() >= 0.0) {
    rec.verdict = Verdict::vacuous;
    return rec;
  }
  const double upper = std::max(0.0, est.point + kZ99 * est.ci_half_width);
  rec.verdict =
      LogScalar::from_value(upper) <= bound ? Verdict::pass : Verdict::fail;
  return rec;
}

std::vector<VerificationRecord> comparison_check(const std::string& check_id,
                                                 const TailCurve& queue_tail,
                                                 const TailCurve& sup_tail,
                                                 std::string spec,
                                                 std::uint64_t seed) {
  if (queue_tail.grid != sup_tail.grid)
    throw std::invalid_argument("comparison_check: tail grids must match");
  std::vector<VerificationRecord> out;
  out.reserve(queue_tail.grid.size());
  for (std::size_t i = 0; i < queue_tail.grid.size(); ++i) {
    const double joint = std::sqrt(
        queue_tail.ci_half_widths[i] * queue_tail.ci_half_widths[i] +
        sup_tail.ci_half_widths[i] * sup_tail.ci_half_widths[i]);
    const double allowed = sup_tail.survival[i] + 3.0 * joint;
    VerificationRecord rec;
    rec.check_id = check_id;
    rec.spec = spec;
    rec.param = fmt_param("level", queue_tail.grid[i]);
    if (allowed > 0.0) rec.bound_exp10 = std::log10(allowed);
    rec.estimate = queue_tail.survival[i];
    rec.estimate_ci = queue_tail.ci_half_widths[i];
    rec.verdict =
        queue_tail.survival[i] <= allowed ? Verdict::pass : Verdict::fail;
    rec.seed = seed;
    out.push_back(std::move(rec));
  }
  return out;
}

QueueSpec queue_at_rho(const Distribution& arrival_shape,
                       const Distribution& service, int servers, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("queue_at_rho: need 0 < rho < 1");
  const double target_mean = servers * service.mean() / rho;
  return QueueSpec(arrival_shape.with_mean(target_mean), service, servers);
}

std::vector<HeavyTrafficPoint> heavy_traffic_check(
    const Distribution& arrival_shape, const Distribution& service,
    const std::vector<double>& rho_list, std::int64_t total_arrivals,
    std::uint64_t seed, double ks_threshold, double gate_rho) {
  std::vector<HeavyTrafficPoint> out;
  for (double rho : rho_list) {
    const QueueSpec q = queue_at_rho(arrival_shape, service, 1, rho);
    SimConfig cfg;
    cfg.total_arrivals = total_arrivals;
    cfg.master_seed = seed;
    std::vector<double> waits;
    waits.reserve(static_cast<std::size_t>(total_arrivals));
    run_kw(q, cfg, &waits);
    for (double& w : waits) w *= (1.0 - rho);
    const double target =
        q.arrival.mean() * 0.5 * (q.arrival.scv() + q.service.scv());
    HeavyTrafficPoint p;
    p.rho = rho;
    p.target_mean = target;
    p.ks_stat = ks_statistic_exponential(std::move(waits), target);
    p.gated = rho >= gate_rho;
    p.pass = !p.gated || p.ks_stat < ks_threshold;
    out.push_back(p);
  }
  return out;
}

ScalingResult scaling_check(const Distribution& arrival_shape,
                            const Distribution& service, int servers,
                            const std::vector<double>& rho_list,
                            std::int64_t total_arrivals, std::uint64_t seed) {
  if (rho_list.empty())
    throw std::invalid_argument("scaling_check: empty rho list");
  ScalingResult out;
  double lo = 0.0, hi = 0.0;
  for (double rho : rho_list) {
    const QueueSpec q = queue_at_rho(arrival_shape, service, servers, rho);
    SimConfig cfg;
    cfg.total_arrivals = total_arrivals;
    cfg.master_seed = seed;
    const EventSimResult res = run_event_sim(q, cfg);
    ScalingPoint p{rho, (1.0 - rho) * res.queue_mean.point,
                   (1.0 - rho) * res.queue_mean.ci_half_width};
    if (out.points.empty() || p.value < lo) lo = p.value;
    if (out.points.empty() || p.value > hi) hi = p.value;
    out.points.push_back(p);
  }
  out.ratio = lo > 0.0 ? hi / lo : (hi > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  out.pass = out.ratio <= 2.0;
  return out;
}

}  // namespace qbound
