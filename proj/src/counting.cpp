#include "kmroots/counting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <thread>
#include <utility>

#include "kmroots/parallel.hpp"

namespace kmroots {

namespace {

using Partition = std::pair<Run, Run>;

struct WalkConfig {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t r = 0;
  FilterLevel prune = FilterLevel::Dyck;  // Eager mode only
  Pruning mode = Pruning::Eager;
  bool want_thm2 = true;  // evaluate cond2 even when not pruning on it
};

/// Flags carried down the search: whether the placed prefix still satisfies
/// cond1 and cond2. Only maintained in Eager mode.
struct Flags {
  bool ok1 = true;
  bool ok2 = true;
};

class Walker {
 public:
  using Leaf = std::function<void(std::span<const Run>, Flags)>;

  Walker(const WalkConfig& config, Leaf leaf)
      : cfg_(config), leaf_(std::move(leaf)) {
    const auto k = static_cast<std::size_t>(std::min(cfg_.n, cfg_.m)) + 2;
    odd_.assign(k, 0);
    even_.assign(k, 0);
    runs_.reserve(2 * k);
  }

  /// First-pair choices (a_1, a_2) that survive pruning, in search order.
  static std::vector<Partition> partitions(const WalkConfig& cfg) {
    std::vector<Partition> out;
    for (Run a = 1; a <= cfg.m; ++a) {
      for_each_right(cfg, 0, a, a, [&](Run b, bool ok1) {
        if (!ok1 && cfg.mode == Pruning::Eager && cfg.prune != FilterLevel::Dyck) return false;
        out.emplace_back(a, b);
        return true;
      });
    }
    return out;
  }

  void walk(Partition first) {
    const auto [a, b] = first;
    runs_.assign({a, b});
    odd_[1] = a;
    even_[1] = b;
    Flags flags;
    if (cfg_.mode == Pruning::Eager) flags.ok1 = cond1_pair_unchecked(a, b, cfg_.r);
    if (a == cfg_.m) {
      leaf_(runs_, flags);
    } else {
      place_up(1, flags);
    }
  }

 private:
  // Calls fn(b, ok1_of_pair) for every right run b after an up run `a` that
  // brings the height to y, starting from x, while the diagonal holds; stops
  // early when fn returns false.
  template <typename Fn>
  static void for_each_right(const WalkConfig& cfg, std::int64_t x, std::int64_t y, Run a,
                             Fn&& fn) {
    const bool final_column = y == cfg.m;
    const Run lo = final_column ? cfg.n - x : 1;
    const Run hi = final_column ? cfg.n - x : cfg.n - x - 1;
    for (Run b = lo; b <= hi; ++b) {
      const __int128 nx = x + b;
      if (nx * cfg.m > static_cast<__int128>(y) * cfg.n) break;
      const bool ok1 = cfg.mode != Pruning::Eager || cond1_pair_unchecked(a, b, cfg.r);
      if (!fn(b, ok1)) break;
    }
  }

  bool prunes_on_thm1() const {
    return cfg_.mode == Pruning::Eager && cfg_.prune != FilterLevel::Dyck;
  }
  bool prunes_on_thm2() const {
    return cfg_.mode == Pruning::Eager && cfg_.prune == FilterLevel::Thm2;
  }

  // Places a_{2t+1}; t >= 1 complete pairs are down already.
  void place_up(std::int64_t t, Flags flags) {
    const std::int64_t y = odd_[t];
    const Run previous = runs_.back();
    for (Run a = 1; a <= cfg_.m - y; ++a) {
      Flags next = flags;
      odd_[t + 1] = y + a;
      if (cfg_.mode == Pruning::Eager) {
        if (next.ok1 && !cond1_pair_unchecked(previous, a, cfg_.r)) {
          if (prunes_on_thm1()) break;  // larger a only widens the ratio
          next.ok1 = false;
        }
        if (next.ok1 && next.ok2 && (cfg_.want_thm2 || prunes_on_thm2()) &&
            !cond2_holds_at(t, odd_, even_, cfg_.r, cfg_.n, cfg_.m)) {
          if (prunes_on_thm2()) break;  // larger a only shrinks every den
          next.ok2 = false;
        }
      }
      runs_.push_back(a);
      place_right(t, a, next);
      runs_.pop_back();
    }
  }

  // Places a_{2t+2} after the up run a = a_{2t+1}.
  void place_right(std::int64_t t, Run a, Flags flags) {
    const std::int64_t y = odd_[t + 1];
    const std::int64_t x = even_[t];
    for_each_right(cfg_, x, y, a, [&](Run b, bool pair_ok) {
      Flags next = flags;
      if (!pair_ok && next.ok1) {
        if (prunes_on_thm1()) return false;
        next.ok1 = false;
      }
      even_[t + 1] = x + b;
      runs_.push_back(b);
      if (y == cfg_.m) {
        leaf_(runs_, next);
      } else {
        place_up(t + 1, next);
      }
      runs_.pop_back();
      return true;
    });
  }

  WalkConfig cfg_;
  Leaf leaf_;
  std::vector<Run> runs_;
  std::vector<std::int64_t> odd_;
  std::vector<std::int64_t> even_;
};

/// Runs fn(partition) -> Result over all partitions on `threads` workers and
/// returns the results in partition order.
template <typename Result, typename Fn>
std::vector<Result> run_partitions(const std::vector<Partition>& parts, unsigned threads,
                                   Fn fn) {
  std::vector<Result> results(parts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < parts.size(); i = next++) {
        results[i] = fn(parts[i]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = parts.size();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parts.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::pair<std::int64_t, std::int64_t> endpoint(const Weight& weight) {
  const auto n = small_coordinate(weight.c0, kMaxEnumerationCoordinate, "enumeration");
  const auto m = small_coordinate(weight.c1, kMaxEnumerationCoordinate, "enumeration");
  if (n < 1 || m < 1) throw Error("Dyck path enumeration needs both coordinates >= 1");
  return {n, m};
}

void require_coprime(const Weight& weight) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), weight.c0.get_mpz_t(), weight.c1.get_mpz_t());
  if (g != 1) {
    throw Error("bounds are defined for coprime roots; got " + weight.to_string());
  }
}

bool accepts(FilterLevel level, Flags flags) {
  switch (level) {
    case FilterLevel::Dyck:
      return true;
    case FilterLevel::Thm1:
      return flags.ok1;
    case FilterLevel::Thm2:
      return flags.ok1 && flags.ok2;
  }
  return false;
}

WalkConfig make_config(std::int64_t n, std::int64_t m, const Rank2Cartan& cartan,
                       FilterLevel prune, Pruning mode) {
  WalkConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.r = cartan.r();
  cfg.mode = mode;
  cfg.prune = mode == Pruning::Eager ? prune : FilterLevel::Dyck;
  cfg.want_thm2 = prune == FilterLevel::Thm2;
  return cfg;
}

}  // namespace

BigInt enumerate_dyck(const Weight& weight, const Rank2Cartan& cartan, FilterLevel filter,
                      const PathVisitor& visitor, const EnumerationOptions& options) {
  const auto [n, m] = endpoint(weight);
  const WalkConfig cfg = make_config(n, m, cartan, filter, options.pruning);
  const auto parts = Walker::partitions(cfg);

  auto is_accepted = [&cartan, filter, mode = options.pruning](std::span<const Run> runs,
                                                                Flags flags) {
    return mode == Pruning::Eager ? accepts(filter, flags)
                                  : passes_filters(runs, cartan, filter);
  };

  if (visitor) {
    BigInt count = 0;
    Walker walker(cfg, [&](std::span<const Run> runs, Flags flags) {
      if (!is_accepted(runs, flags)) return;
      ++count;
      visitor(runs);
    });
    for (const auto& part : parts) walker.walk(part);
    return count;
  }

  auto counts = run_partitions<BigInt>(parts, resolve_threads(options.threads),
                                       [&](const Partition& part) {
                                         BigInt local = 0;
                                         Walker walker(cfg, [&](std::span<const Run> runs,
                                                                Flags flags) {
                                           if (is_accepted(runs, flags)) ++local;
                                         });
                                         walker.walk(part);
                                         return local;
                                       });
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

BigInt bound1(const Weight& weight, const Rank2Cartan& cartan,
              const EnumerationOptions& options) {
  require_coprime(weight);
  return enumerate_dyck(weight, cartan, FilterLevel::Thm1, {}, options);
}

BigInt bound2(const Weight& weight, const Rank2Cartan& cartan,
              const EnumerationOptions& options) {
  require_coprime(weight);
  return enumerate_dyck(weight, cartan, FilterLevel::Thm2, {}, options);
}

BoundReport bound_report(const Weight& weight, const Rank2Cartan& cartan,
                         const BoundReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_coprime(weight);
  const auto [n, m] = endpoint(weight);
  const Pruning mode = options.enumeration.pruning;
  // Only the diagonal may prune: every Dyck path has to reach a leaf.
  WalkConfig cfg = make_config(n, m, cartan, FilterLevel::Dyck, mode);
  cfg.want_thm2 = true;
  const auto parts = Walker::partitions(cfg);

  struct Tally {
    BigInt dyck = 0, thm1 = 0, thm2 = 0;
    std::vector<StringData> listed;
  };
  std::atomic<std::size_t> listed_total{0};
  const auto list_level = options.list_level;

  auto tallies = run_partitions<Tally>(
      parts, resolve_threads(options.enumeration.threads), [&](const Partition& part) {
        Tally t;
        Walker walker(cfg, [&](std::span<const Run> runs, Flags flags) {
          if (mode == Pruning::AtLeaf) {
            flags.ok1 = passes_filters(runs, cartan, FilterLevel::Thm1);
            flags.ok2 = flags.ok1 && passes_filters(runs, cartan, FilterLevel::Thm2);
          }
          ++t.dyck;
          if (flags.ok1) ++t.thm1;
          if (flags.ok1 && flags.ok2) ++t.thm2;
          if (list_level && accepts(*list_level, flags)) {
            if (++listed_total > options.list_limit) {
              throw Error("path listing exceeds the limit of " +
                          std::to_string(options.list_limit) +
                          " paths; rerun in counting-only mode");
            }
            t.listed.push_back(StringData{{runs.begin(), runs.end()}});
          }
        });
        walker.walk(part);
        return t;
      });

  BoundReport report;
  report.weight = weight;
  report.r = cartan.r();
  report.root_class = classify(weight, cartan);
  report.dyck_total = 0;
  report.count_thm1 = 0;
  report.count_thm2 = 0;
  std::vector<StringData> listed;
  for (auto& t : tallies) {
    report.dyck_total += t.dyck;
    report.count_thm1 += t.thm1;
    report.count_thm2 += t.thm2;
    std::move(t.listed.begin(), t.listed.end(), std::back_inserter(listed));
  }
  if (list_level) {
    std::vector<std::pair<std::string, StringData>> keyed;
    keyed.reserve(listed.size());
    for (auto& d : listed) keyed.emplace_back(runs_to_word(d), std::move(d));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<StringData> sorted;
    sorted.reserve(keyed.size());
    for (auto& [word, d] : keyed) sorted.push_back(std::move(d));
    report.listed_level = *list_level;
    report.paths_listed = std::move(sorted);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace kmroots
