#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qbound/verify.hpp"

namespace qbound {

/// A campaign is an ordered list of independent verification tasks.  Each
/// task owns random streams derived from (master seed, task index), so the
/// assembled report is byte-identical for a given (config, seed) no matter
/// how many workers run it.
struct CampaignConfig {
  std::string name = "custom";
  std::uint64_t master_seed = 1;
  int threads = 1;

  using Task = std::function<std::vector<VerificationRecord>(std::uint64_t seed)>;
  std::vector<Task> tasks;

  // Task builders.  `spec` queues must already be stable.
  void add_classical_dominance(QueueSpec spec, std::int64_t arrivals);
  void add_main_bound_dominance(QueueSpec spec, double r, std::int64_t arrivals);
  void add_tail_comparison(QueueSpec spec, std::int64_t arrivals, int reps,
                           int max_level);
  void add_sspd_comparison(QueueSpec spec, std::int64_t arrivals, int reps);
  void add_lemma_moments(Distribution dist, int reps);
  void add_lemma_scaling_slopes(Distribution dist, int reps);
  void add_heavy_traffic(Distribution arrival_shape, Distribution service,
                         std::vector<double> rhos, std::int64_t arrivals,
                         double threshold = 0.05, double gate_rho = 0.98);
  void add_scaling(Distribution arrival_shape, Distribution service, int servers,
                   std::vector<double> rhos, std::int64_t arrivals);
};

struct CampaignReport {
  std::string name;
  std::uint64_t master_seed = 0;
  std::vector<VerificationRecord> records;

  int passes() const;
  int failures() const;
  int vacuous() const;
  /// True when no non-vacuous check failed.
  bool ok() const { return failures() == 0; }

  std::string to_csv() const;
  std::string to_json() const;
  std::string summary_line() const;
};

CampaignReport run_campaign(const CampaignConfig& cfg);

/// The standard verification sweep: classical and moment-based bound
/// dominance, stochastic-comparison tails, moment-lemma dominance with
/// scaling slopes, heavy-traffic and 1/(1-rho) scaling checks.
CampaignConfig default_campaign(std::uint64_t seed);

/// Small fast sweep used for smoke tests and determinism checks.
CampaignConfig quick_campaign(std::uint64_t seed);

/// Parse a campaign from its JSON description (see README for the schema).
CampaignConfig campaign_from_json(const std::string& text);

}  // namespace qbound
