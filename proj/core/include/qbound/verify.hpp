#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbound/distribution.hpp"
#include "qbound/log_scalar.hpp"
#include "qbound/queue_sim.hpp"
#include "qbound/stats.hpp"

namespace qbound {

enum class Verdict { pass, fail, vacuous };

const char* verdict_name(Verdict v);

/// One bound-vs-estimate comparison.  `bound_exp10` is empty for a zero
/// bound; `spec`/`param` carry enough metadata to re-run the check alone.
struct VerificationRecord {
  std::string check_id;
  std::string spec;
  std::string param;
  std::optional<double> bound_exp10;
  double estimate = 0.0;
  double estimate_ci = 0.0;
  Verdict verdict = Verdict::pass;
  std::uint64_t seed = 0;
};

/// One-sided 99% dominance: pass iff estimate + 2.58 ci <= bound, compared
/// in exponent space so bounds beyond double range work.  A probability
/// bound that clamps to 1 is reported vacuous instead of pass.
VerificationRecord dominance_check(std::string check_id, const LogScalar& bound,
                                   const StationaryEstimate& est,
                                   bool probability_bound, std::string spec,
                                   std::string param, std::uint64_t seed);

/// Distributional comparison of two survival curves on a common grid:
/// per level, pass iff queue survival <= sup survival + 3 joint half-widths.
std::vector<VerificationRecord> comparison_check(const std::string& check_id,
                                                 const TailCurve& queue_tail,
                                                 const TailCurve& sup_tail,
                                                 std::string spec,
                                                 std::uint64_t seed);

struct HeavyTrafficPoint {
  double rho = 0.0;
  double ks_stat = 0.0;
  double target_mean = 0.0;
  bool gated = false;  // only near-critical points are pass/fail gated
  bool pass = true;
};

/// Kolmogorov-Smirnov check of (1-rho) W against the exponential heavy
/// traffic limit with mean E[A](cA2+cS2)/2, for a GI/GI/1 family swept over
/// rho by arrival-rate scaling.
std::vector<HeavyTrafficPoint> heavy_traffic_check(
    const Distribution& arrival_shape, const Distribution& service,
    const std::vector<double>& rho_list, std::int64_t total_arrivals,
    std::uint64_t seed, double ks_threshold = 0.05, double gate_rho = 0.98);

struct ScalingPoint {
  double rho = 0.0;
  double value = 0.0;  // (1-rho) E[L] estimate
  double ci = 0.0;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  double ratio = 1.0;  // max over min of the values
  bool pass = true;    // ratio <= 2
};

/// Reports (1-rho) E[L] across the rho grid; passes iff the max/min ratio
/// stays within a factor of two.
ScalingResult scaling_check(const Distribution& arrival_shape,
                            const Distribution& service, int servers,
                            const std::vector<double>& rho_list,
                            std::int64_t total_arrivals, std::uint64_t seed);

/// Rescale the arrival distribution of a GI/GI/n family to hit `rho`.
QueueSpec queue_at_rho(const Distribution& arrival_shape,
                       const Distribution& service, int servers, double rho);

}  // namespace qbound
