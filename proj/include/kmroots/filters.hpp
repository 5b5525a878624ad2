#pragma once

// Stability conditions on rational Dyck paths as exact integer predicates.
//
// cond1: for every consecutive pair of runs (a, b), either b <= a or the
// norm of a*alpha + b*alpha' is nonpositive, i.e. a^2 + b^2 - r*a*b <= 0.
// This is the integer form of b/a <= (r + sqrt(r^2 - 4)) / 2.
//
// cond2: for a path a_1..a_{2k} ending at (n, m) and all 1 <= x <= y < k,
//   (a_2 + ... + a_{2y}) * m <= den * n, where
//   den = (a_1 + ... + a_{2x-3}) + r (a_{2x} + ... + a_{2y})
//         - (a_{2x+1} + ... + a_{2y+1})
// with indices stepping by 2. A nonpositive den counts as a violation.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "kmroots/lattice.hpp"
#include "kmroots/string_data.hpp"

namespace kmroots {

enum class FilterLevel { Dyck, Thm1, Thm2 };

std::string to_string(FilterLevel level);
/// Accepts "dyck", "thm1"/"1", "thm2"/"2".
FilterLevel parse_filter_level(std::string_view text);

inline bool cond1_pair_unchecked(Run a, Run b, std::int64_t r) noexcept {
  if (b <= a) return true;
  const __int128 aa = a, bb = b;
  return aa * aa + bb * bb - static_cast<__int128>(r) * aa * bb <= 0;
}

/// Throws Error unless a, b >= 1.
bool cond1_pair(Run a, Run b, const Rank2Cartan& cartan);

bool cond1(std::span<const Run> runs, const Rank2Cartan& cartan);
inline bool cond1(const StringData& data, const Rank2Cartan& cartan) {
  return cond1(data.runs, cartan);
}

/// Prefix sums over a run sequence: odd[t] = a_1 + a_3 + ... + a_{2t-1},
/// even[t] = a_2 + ... + a_{2t}; odd[0] = even[0] = 0.
///
/// Checks every pair (x, y) with 1 <= x <= y for the given y. Needs odd up to
/// index y+1 and even up to index y.
bool cond2_holds_at(std::int64_t y, std::span<const std::int64_t> odd,
                    std::span<const std::int64_t> even, std::int64_t r, std::int64_t n,
                    std::int64_t m) noexcept;

/// Throws Error on odd-length data ("condition defined for complete paths")
/// or runs < 1.
bool cond2(std::span<const Run> runs, const Rank2Cartan& cartan);
inline bool cond2(const StringData& data, const Rank2Cartan& cartan) {
  return cond2(data.runs, cartan);
}

/// Dyck; Thm1 = Dyck and cond1; Thm2 = Thm1 and cond2.
bool passes_filters(std::span<const Run> runs, const Rank2Cartan& cartan, FilterLevel level);
inline bool passes_filters(const StringData& data, const Rank2Cartan& cartan,
                           FilterLevel level) {
  return passes_filters(data.runs, cartan, level);
}

}  // namespace kmroots
