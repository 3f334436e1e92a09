#pragma once

#include <cmath>
#include <cstdint>

namespace qbound {

/// Counter-based random stream keyed by (master_seed, stream_id).
///
/// Draw i of a stream is a fixed bijective mix of the key and the counter,
/// so identical keys replay identical sequences and replication-level
/// parallelism stays deterministic no matter how work is scheduled.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : base_(mix(master_seed + 0x9E3779B97F4A7C15ULL) ^
              mix(stream_id + 0xD1B54A32D192ED03ULL)),
        master_seed_(master_seed),
        stream_id_(stream_id) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    return mix(base_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform draw strictly inside (0,1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(next_unit()) / rate; }

  /// Standard normal via Box-Muller; consumes two uniforms.
  double normal() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
};

}  // namespace qbound
