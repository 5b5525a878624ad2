#pragma once

// Binary words and their run-length ("string data") encoding for the
// alternating measuring sequence 1,0,1,0,...: odd-indexed runs are letter 1
// (alpha_1, a step up), even-indexed runs are letter 0 (alpha_0, a step right).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmroots/lattice.hpp"

namespace kmroots {

/// Run lengths are machine integers: every run indexes into a word that has
/// to be materialized somewhere, so 2^32 letters per run is a hard ceiling.
using Run = std::int64_t;
inline constexpr Run kMaxRun = Run{1} << 32;

struct StringData {
  std::vector<Run> runs;

  /// a_1 >= 0, a_i >= 1 for i >= 2, every run <= kMaxRun.
  bool is_canonical() const;
  std::string to_string() const;  // comma separated

  friend bool operator==(const StringData&, const StringData&) = default;
  friend auto operator<=>(const StringData&, const StringData&) = default;
};

/// String data of a rational Dyck path together with its endpoint (n, m).
struct DyckPath {
  StringData data;
  std::int64_t n = 0;  // sum of even runs (steps right)
  std::int64_t m = 0;  // sum of odd runs (steps up)
};

/// Throws Error on characters other than '0' and '1'.
void require_binary_word(std::string_view word);

StringData word_to_runs(std::string_view word);

/// Throws Error on non-canonical runs.
std::string runs_to_word(const StringData& data);

/// Parses "2,1,1,3"; an empty string gives empty runs.
StringData parse_runs(std::string_view text);

Weight weight_of(const StringData& data);

bool is_dyck(std::span<const Run> runs);
inline bool is_dyck(const StringData& data) { return is_dyck(data.runs); }

/// beta_1 .. beta_count with beta_1 = alpha_0, beta_{j+1} = r beta_j - beta_{j-1},
/// beta_0 = -alpha_1.
std::vector<SignedWeight> littelmann_roots(const Rank2Cartan& cartan, std::size_t count);

/// a_{j+2} beta_j <= a_{j+1} beta_{j+1} componentwise for 1 <= j <= L-2.
bool littelmann_valid(const StringData& data, const Rank2Cartan& cartan);

inline constexpr std::int64_t kDefaultWordLimit = 24;

/// Number of words with c1 ones and c0 zeros whose string data is valid,
/// i.e. the dimension of the corresponding weight space of U+. Throws Error if
/// c0 + c1 exceeds `limit`; use kostant_count for larger weights.
BigInt count_valid_string_data(const Weight& weight, const Rank2Cartan& cartan,
                               std::int64_t limit = kDefaultWordLimit);

}  // namespace kmroots
