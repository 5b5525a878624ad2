#pragma once

// Machine-readable output. JSON objects keep field order stable and emit every
// integer as a decimal string, so no value ever passes through a double.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kmroots/counting.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/peterson.hpp"
#include "kmroots/sampler.hpp"

namespace kmroots {

using Json = nlohmann::ordered_json;

/// Parses "<c0>,<c1>" into a weight (decimal, arbitrary size).
Weight parse_weight(std::string_view text);

/// Parses a decimal or 0x-prefixed hexadecimal 64-bit seed.
std::uint64_t parse_seed(std::string_view text);

Json weight_json(const Weight& w);

Json multiplicity_json(const Weight& root, const Rank2Cartan& cartan, const BigInt& mult);
Json bound_json(const BoundReport& report);
Json estimate_json(const EstimateReport& report);
Json visits_json(const VisitStatistic& stat);

/// Runs, weight, and each predicate for a binary word. cond1 is present when
/// every run is positive; cond2 additionally needs an even number of runs.
Json validate_json(std::string_view word, const Rank2Cartan& cartan);

enum class Family { Staircase, Antistaircase };

Family parse_family(std::string_view text);

/// (n+1, n) or (n, n+1) for n = 1 .. max_n.
std::vector<Weight> family_roots(Family family, std::int64_t max_n);

struct TableRow {
  std::int64_t n = 0;
  Weight root;
  BigInt multiplicity;
  // Empty when the row was skipped; `skip_reason` says why.
  std::optional<BigInt> bound1;
  std::optional<BigInt> bound2;
  std::string skip_reason;
};

/// One row per root. Bounds are skipped ("skipped") when the root's Dyck path
/// count exceeds `max_dyck_paths`, and marked "n/a" for non-coprime roots.
std::vector<TableRow> bound_table(const std::vector<std::pair<std::int64_t, Weight>>& roots,
                                  const Rank2Cartan& cartan,
                                  std::optional<BigInt> max_dyck_paths,
                                  const EnumerationOptions& options = {});

/// Header: n,root_c0,root_c1,multiplicity,bound1,bound2,gap1,gap2
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace kmroots
