#include "kmroots/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "kmroots/parallel.hpp"

namespace kmroots {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;
constexpr std::int64_t kMaxSampleCoordinate = std::int64_t{1} << 24;

/// Runs fn(chunk_index, chunk_samples) -> Result for every chunk and returns
/// the results in chunk order.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::uint64_t samples, std::uint64_t chunk_size,
                               unsigned threads, Fn fn) {
  if (chunk_size == 0) throw Error("chunk size must be positive");
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        const std::uint64_t count = std::min(chunk_size, samples - c * chunk_size);
        results[c] = fn(c, count);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, chunks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::pair<std::int64_t, std::int64_t> sample_endpoint(const Weight& weight) {
  return {small_coordinate(weight.c0, kMaxSampleCoordinate, "sampling"),
          small_coordinate(weight.c1, kMaxSampleCoordinate, "sampling")};
}

bool passes(std::span<const Run> runs, std::int64_t r, FilterLevel level,
            const Rank2Cartan& cartan) {
  if (level == FilterLevel::Dyck) return true;
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    if (!cond1_pair_unchecked(runs[k], runs[k + 1], r)) return false;
  }
  if (level == FilterLevel::Thm1) return true;
  return cond2(runs, cartan);
}

}  // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  std::uint64_t z = seed + (chunk + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t cycle_lemma_start(std::span<const std::uint8_t> word, std::int64_t n,
                              std::int64_t m) {
  std::int64_t h = 0;
  std::int64_t lowest = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    h += word[i] ? n : -m;
    // Minimum over prefix lengths 0 .. L-1; the full word returns to 0.
    if (i + 1 < word.size() && h < lowest) {
      lowest = h;
      start = i + 1;
    }
  }
  return start;
}

DyckSampler::DyckSampler(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw Error("sampling needs both coordinates >= 1");
  if (std::gcd(n, m) != 1) throw Error("uniform sampling requires a coprime endpoint");
  word_.assign(static_cast<std::size_t>(n + m), 0);
  std::fill(word_.begin(), word_.begin() + m, std::uint8_t{1});
  runs_.reserve(word_.size());
}

std::span<const Run> DyckSampler::draw(Rng& rng) {
  // Shuffling any arrangement of the multiset is uniform, so the buffer is
  // never reset.
  std::shuffle(word_.begin(), word_.end(), rng);
  start_ = cycle_lemma_start(word_, n_, m_);

  runs_.clear();
  const std::size_t length = word_.size();
  std::uint8_t current = 1;
  Run run = 0;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t at = start_ + i;
    if (at >= length) at -= length;
    if (word_[at] == current) {
      ++run;
    } else {
      runs_.push_back(run);
      current = word_[at];
      run = 1;
    }
  }
  runs_.push_back(run);
  assert(is_dyck(runs_));
  return runs_;
}

DyckPath sample_uniform_dyck(const Weight& weight, Rng& rng) {
  const auto [n, m] = sample_endpoint(weight);
  DyckSampler sampler(n, m);
  const auto runs = sampler.draw(rng);
  return DyckPath{StringData{{runs.begin(), runs.end()}}, n, m};
}

EstimateReport estimate_bound(const Weight& weight, const Rank2Cartan& cartan,
                              FilterLevel filter, std::uint64_t samples, std::uint64_t seed,
                              const SamplingOptions& options) {
  if (samples < 1) throw Error("sample count must be positive");
  const auto [n, m] = sample_endpoint(weight);
  DyckSampler probe(n, m);  // validates the endpoint before any work

  const auto hits_per_chunk = run_chunks<std::uint64_t>(
      samples, options.chunk_size, resolve_threads(options.threads),
      [&](std::uint64_t chunk, std::uint64_t count) {
        Rng rng(chunk_seed(seed, chunk));
        DyckSampler sampler(n, m);
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
          if (passes(sampler.draw(rng), cartan.r(), filter, cartan)) ++hits;
        }
        return hits;
      });

  EstimateReport report;
  report.weight = weight;
  report.r = cartan.r();
  report.filter = filter;
  report.samples = samples;
  report.hits = std::accumulate(hits_per_chunk.begin(), hits_per_chunk.end(), std::uint64_t{0});
  report.dyck_total = dyck_count(weight.c0, weight.c1);
  report.seed = seed;
  report.chunk_size = options.chunk_size;

  mpf_class p(0, kFloatBits), total(report.dyck_total, kFloatBits);
  mpq_class ratio(BigInt(std::to_string(report.hits)), BigInt(std::to_string(samples)));
  p = ratio;
  report.fraction = mpf_class(p, kFloatBits);
  report.estimate = mpf_class(p * total, kFloatBits);
  mpf_class variance(p * (1 - p) / mpf_class(BigInt(std::to_string(samples)), kFloatBits),
                     kFloatBits);
  report.std_error = mpf_class(sqrt(variance) * total, kFloatBits);
  return report;
}

VisitStatistic visits_statistic(std::int64_t k, std::int64_t distance, std::uint64_t samples,
                                std::uint64_t seed, const SamplingOptions& options) {
  if (k < 1) throw Error("k must be positive");
  if (distance < 0) throw Error("distance must be nonnegative");
  if (samples < 1) throw Error("sample count must be positive");
  if (k >= kMaxSampleCoordinate) throw Error("k too large for sampling");

  struct Moments {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
  };
  const auto moments = run_chunks<Moments>(
      samples, options.chunk_size, resolve_threads(options.threads),
      [&](std::uint64_t chunk, std::uint64_t count) {
        Rng rng(chunk_seed(seed, chunk));
        DyckSampler sampler(k + 1, k);
        Moments local;
        for (std::uint64_t s = 0; s < count; ++s) {
          sampler.draw(rng);
          std::int64_t x = 0, y = 0;
          std::uint64_t visits = distance == 0 ? 1 : 0;
          for (std::size_t i = 0; i < sampler.length(); ++i) {
            (sampler.up(i) ? y : x) += 1;
            if (y - x == distance) ++visits;
          }
          local.sum += visits;
          local.sum_sq += visits * visits;
        }
        return local;
      });

  VisitStatistic stat;
  stat.k = k;
  stat.distance = distance;
  stat.samples = samples;
  stat.seed = seed;
  stat.chunk_size = options.chunk_size;
  std::uint64_t sum_sq = 0;
  for (const auto& mo : moments) {
    stat.total_visits += mo.sum;
    sum_sq += mo.sum_sq;
  }
  const double count = static_cast<double>(samples);
  stat.mean = static_cast<double>(stat.total_visits) / count;
  const double second = static_cast<double>(sum_sq) / count;
  const double variance = std::max(0.0, second - stat.mean * stat.mean);
  stat.std_error = samples > 1 ? std::sqrt(variance / (count - 1)) : 0.0;
  return stat;
}

std::string format_significant(const mpf_class& value, int digits) {
  if (digits < 1) digits = 1;
  char* raw = nullptr;
  const int len = gmp_asprintf(&raw, "%.*Fe", digits - 1, value.get_mpf_t());
  std::string out = len >= 0 ? std::string(raw, static_cast<std::size_t>(len)) : std::string();
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  if (raw) free_fn(raw, static_cast<std::size_t>(len) + 1);
  return out;
}

}  // namespace kmroots
