#pragma once

// Exhaustive enumeration of rational Dyck paths under the stability filters.
//
// The search extends a run sequence two runs at a time (an up run, then a
// right run), pruning on the diagonal, on every cond1 pair as soon as both
// runs are placed, and on cond2 for y = t as soon as a_{2t+1} is placed.
// All three conditions are prefix-closed, so pruning never loses a path.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kmroots/filters.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/string_data.hpp"

namespace kmroots {

enum class Pruning {
  Eager,   // prune on every prefix-closed condition
  AtLeaf,  // prune on the diagonal only; full predicates at each complete path
};

/// Largest coordinate accepted by the exhaustive enumerator.
inline constexpr std::int64_t kMaxEnumerationCoordinate = 4096;
inline constexpr std::size_t kDefaultListLimit = 1'000'000;

struct EnumerationOptions {
  unsigned threads = 0;  // 0: default_thread_count()
  Pruning pruning = Pruning::Eager;
};

using PathVisitor = std::function<void(std::span<const Run>)>;

/// Visits every run sequence of weight (n, m) passing `filter` exactly once and
/// returns the number visited. With a visitor the walk runs on the calling
/// thread; without one it is split over (a_1, a_2) partitions.
BigInt enumerate_dyck(const Weight& weight, const Rank2Cartan& cartan, FilterLevel filter,
                      const PathVisitor& visitor = {}, const EnumerationOptions& options = {});

/// Number of Dyck paths to (n, m) satisfying cond1. Throws Error unless
/// gcd(n, m) = 1.
BigInt bound1(const Weight& weight, const Rank2Cartan& cartan,
              const EnumerationOptions& options = {});

/// Number of Dyck paths to (n, m) satisfying cond1 and cond2.
BigInt bound2(const Weight& weight, const Rank2Cartan& cartan,
              const EnumerationOptions& options = {});

struct BoundReport {
  Weight weight;
  std::int64_t r = 0;
  RootClass root_class = RootClass::NotARoot;
  BigInt dyck_total;
  BigInt count_thm1;
  BigInt count_thm2;
  std::chrono::duration<double> elapsed{};
  FilterLevel listed_level = FilterLevel::Thm2;
  /// Sorted by word, descending.
  std::optional<std::vector<StringData>> paths_listed;
};

struct BoundReportOptions {
  EnumerationOptions enumeration;
  std::optional<FilterLevel> list_level;  // collect passing paths at this level
  std::size_t list_limit = kDefaultListLimit;
};

/// All three counts in one traversal. Throws Error for non-coprime weights and
/// when listing would exceed `list_limit` paths.
BoundReport bound_report(const Weight& weight, const Rank2Cartan& cartan,
                         const BoundReportOptions& options = {});

}  // namespace kmroots
