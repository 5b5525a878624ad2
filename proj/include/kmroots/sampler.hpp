#pragma once

// Exactly uniform rational Dyck paths via the cycle lemma, and Monte Carlo
// estimates of the filtered path counts.
//
// Reproducibility contract: samples are drawn in chunks of `chunk_size`; chunk
// c uses std::mt19937_64 seeded with chunk_seed(seed, c). Hits merge by
// addition, so a report depends only on (seed, samples, chunk_size) and never
// on the worker count.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kmroots/filters.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/string_data.hpp"

namespace kmroots {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultChunkSize = 1u << 16;

/// splitmix64 finalizer applied to seed + (chunk + 1) * 0x9e3779b97f4a7c15.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

/// Reusable buffers for drawing uniform Dyck paths to a fixed endpoint.
class DyckSampler {
 public:
  /// Throws Error unless n, m >= 1 and gcd(n, m) = 1.
  DyckSampler(std::int64_t n, std::int64_t m);

  /// Shuffles the word uniformly, then rotates it to start right after the
  /// unique minimum of h_i = n * ones_i - m * zeros_i. Returns the runs of the
  /// rotated word, valid until the next draw.
  std::span<const Run> draw(Rng& rng);

  /// Letter i of the last drawn path (true = 1 = up).
  bool up(std::size_t i) const { return word_[(start_ + i) % word_.size()] != 0; }
  std::size_t length() const { return word_.size(); }
  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }

 private:
  std::int64_t n_;
  std::int64_t m_;
  std::vector<std::uint8_t> word_;
  std::size_t start_ = 0;
  std::vector<Run> runs_;
};

/// Index where the cycle-lemma rotation of `word` begins (letters 0/1).
std::size_t cycle_lemma_start(std::span<const std::uint8_t> word, std::int64_t n,
                              std::int64_t m);

DyckPath sample_uniform_dyck(const Weight& weight, Rng& rng);

struct SamplingOptions {
  unsigned threads = 0;  // 0: default_thread_count()
  std::uint64_t chunk_size = kDefaultChunkSize;
};

struct EstimateReport {
  Weight weight;
  std::int64_t r = 0;
  FilterLevel filter = FilterLevel::Thm1;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  BigInt dyck_total;
  mpf_class fraction;   // hits / samples
  mpf_class estimate;   // fraction * dyck_total
  mpf_class std_error;  // sqrt(p (1 - p) / samples) * dyck_total
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
};

EstimateReport estimate_bound(const Weight& weight, const Rank2Cartan& cartan,
                              FilterLevel filter, std::uint64_t samples, std::uint64_t seed,
                              const SamplingOptions& options = {});

struct VisitStatistic {
  std::int64_t k = 0;
  std::int64_t distance = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
  std::uint64_t total_visits = 0;
  double mean = 0;
  double std_error = 0;
};

/// Mean number of lattice points (x, y) with y - x = distance visited by a
/// uniform Dyck path to (k + 1, k), endpoints included.
VisitStatistic visits_statistic(std::int64_t k, std::int64_t distance, std::uint64_t samples,
                                std::uint64_t seed, const SamplingOptions& options = {});

/// Decimal scientific notation with `digits` significant digits.
std::string format_significant(const mpf_class& value, int digits = 6);

}  // namespace kmroots
