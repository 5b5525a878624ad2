#include "kmroots/filters.hpp"

#include <vector>

namespace kmroots {

std::string to_string(FilterLevel level) {
  switch (level) {
    case FilterLevel::Dyck:
      return "dyck";
    case FilterLevel::Thm1:
      return "thm1";
    case FilterLevel::Thm2:
      return "thm2";
  }
  return "unknown";
}

FilterLevel parse_filter_level(std::string_view text) {
  if (text == "dyck" || text == "0") return FilterLevel::Dyck;
  if (text == "thm1" || text == "1") return FilterLevel::Thm1;
  if (text == "thm2" || text == "2") return FilterLevel::Thm2;
  throw Error("unknown filter level '" + std::string(text) + "'");
}

bool cond1_pair(Run a, Run b, const Rank2Cartan& cartan) {
  if (a < 1 || b < 1 || a > kMaxRun || b > kMaxRun) {
    throw Error("cond1_pair needs run lengths in [1, 2^32]");
  }
  return cond1_pair_unchecked(a, b, cartan.r());
}

namespace {

void require_positive_runs(std::span<const Run> runs) {
  for (Run a : runs) {
    if (a < 1 || a > kMaxRun) throw Error("stability filters need all runs in [1, 2^32]");
  }
}

}  // namespace

bool cond1(std::span<const Run> runs, const Rank2Cartan& cartan) {
  require_positive_runs(runs);
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    if (!cond1_pair_unchecked(runs[k], runs[k + 1], cartan.r())) return false;
  }
  return true;
}

bool cond2_holds_at(std::int64_t y, std::span<const std::int64_t> odd,
                    std::span<const std::int64_t> even, std::int64_t r, std::int64_t n,
                    std::int64_t m) noexcept {
  const __int128 num = even[y];
  for (std::int64_t x = 1; x <= y; ++x) {
    const __int128 den = static_cast<__int128>(odd[x - 1]) +
                         static_cast<__int128>(r) * (even[y] - even[x - 1]) -
                         (odd[y + 1] - odd[x]);
    if (den <= 0) return false;
    if (num * m > den * n) return false;
  }
  return true;
}

bool cond2(std::span<const Run> runs, const Rank2Cartan& cartan) {
  if (runs.size() % 2 != 0) throw Error("condition defined for complete paths");
  require_positive_runs(runs);
  const std::size_t k = runs.size() / 2;
  std::vector<std::int64_t> odd(k + 1, 0), even(k + 1, 0);
  for (std::size_t t = 1; t <= k; ++t) {
    odd[t] = odd[t - 1] + runs[2 * t - 2];
    even[t] = even[t - 1] + runs[2 * t - 1];
  }
  const std::int64_t m = odd[k];
  const std::int64_t n = even[k];
  for (std::size_t y = 1; y < k; ++y) {
    if (!cond2_holds_at(static_cast<std::int64_t>(y), odd, even, cartan.r(), n, m)) {
      return false;
    }
  }
  return true;
}

bool passes_filters(std::span<const Run> runs, const Rank2Cartan& cartan, FilterLevel level) {
  if (!is_dyck(runs)) return false;
  if (level == FilterLevel::Dyck) return true;
  if (!cond1(runs, cartan)) return false;
  if (level == FilterLevel::Thm1) return true;
  return cond2(runs, cartan);
}

}  // namespace kmroots
