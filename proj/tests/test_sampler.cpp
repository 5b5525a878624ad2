#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "kmroots/sampler.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

const Rank2Cartan r3(3);

std::vector<std::uint8_t> letters(const std::string& word) {
  std::vector<std::uint8_t> out;
  for (char ch : word) out.push_back(ch == '1');
  return out;
}

std::string rotate(const std::string& word, std::size_t start) {
  return word.substr(start) + word.substr(0, start);
}

double as_double(const mpf_class& v) { return v.get_d(); }

}  // namespace

TEST_CASE("cycle lemma picks the unique Dyck rotation") {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; n + m <= 11; ++m) {
      if (oracle::gcd(n, m) != 1) continue;
      for (const auto& w : oracle::all_words(n, m)) {
        const auto rotations = oracle::dyck_rotations(w, n, m);
        CAPTURE(w);
        REQUIRE(rotations.size() == 1);
        CHECK(rotate(w, cycle_lemma_start(letters(w), n, m)) == rotations.front());
      }
    }
  }
}

TEST_CASE("every (4,3) Dyck path has a fiber of seven words") {
  std::map<std::string, int> fiber;
  for (const auto& w : oracle::all_words(4, 3)) {
    ++fiber[rotate(w, cycle_lemma_start(letters(w), 4, 3))];
  }
  CHECK(fiber.size() == 5);
  for (const auto& [path, size] : fiber) {
    CAPTURE(path);
    CHECK(size == 7);
    CHECK(oracle::above_diagonal(path, 4, 3));
  }
}

TEST_CASE("sampler rejects bad endpoints") {
  CHECK_THROWS_AS(DyckSampler(4, 2), Error);
  CHECK_THROWS_AS(DyckSampler(0, 1), Error);
  CHECK_THROWS_AS(estimate_bound(Weight(4, 3), r3, FilterLevel::Thm1, 0, 1), Error);
}

TEST_CASE("samples are uniform over the (5,4) Dyck paths") {
  const std::uint64_t draws = 100000;
  const auto paths = oracle::dyck_words(5, 4);
  REQUIRE(paths.size() == 14);
  std::map<std::string, std::uint64_t> counts;
  Rng rng(12345);
  DyckSampler sampler(5, 4);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto runs = sampler.draw(rng);
    ++counts[runs_to_word(StringData{{runs.begin(), runs.end()}})];
  }
  CHECK(counts.size() == paths.size());
  const double p = 1.0 / static_cast<double>(paths.size());
  const double mean = p * draws;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& w : paths) {
    CAPTURE(w);
    CHECK(std::abs(static_cast<double>(counts[w]) - mean) < 4 * sigma);
  }
}

TEST_CASE("sample_uniform_dyck returns Dyck paths of the right weight") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto path = sample_uniform_dyck(Weight(13, 8), rng);
    CHECK(is_dyck(path.data));
    CHECK(weight_of(path.data) == Weight(13, 8));
    CHECK(path.n == 13);
    CHECK(path.m == 8);
  }
}

TEST_CASE("estimate for (4,3)") {
  const auto report = estimate_bound(Weight(4, 3), r3, FilterLevel::Thm1, 100000, 1);
  const double p = 0.8;
  const double sigma = std::sqrt(p * (1 - p) / 100000.0);
  CHECK(std::abs(as_double(report.fraction) - p) < 4 * sigma);
  CHECK(report.dyck_total == 5);
  CHECK(report.samples == 100000);
}

TEST_CASE("every (2,1) path passes") {
  const auto report = estimate_bound(Weight(2, 1), r3, FilterLevel::Thm2, 1000, 9);
  CHECK(report.hits == 1000);
  CHECK(report.fraction == 1);
  CHECK(report.std_error == 0);
}

TEST_CASE("estimate for (16,15) brackets the exact count") {
  const auto report = estimate_bound(Weight(16, 15), r3, FilterLevel::Thm2, 1000000, 42);
  const double est = as_double(report.estimate);
  const double se = as_double(report.std_error);
  CHECK(se > 0);
  CHECK(std::abs(est - 815215.0) < 4 * se);
}

TEST_CASE("estimates do not depend on the thread count") {
  SamplingOptions one, three;
  one.threads = 1;
  one.chunk_size = 1000;
  three.threads = 3;
  three.chunk_size = 1000;
  const auto a = estimate_bound(Weight(16, 15), r3, FilterLevel::Thm1, 25000, 77, one);
  const auto b = estimate_bound(Weight(16, 15), r3, FilterLevel::Thm1, 25000, 77, three);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);

  const auto c = visits_statistic(50, 2, 7000, 3, one);
  const auto d = visits_statistic(50, 2, 7000, 3, three);
  CHECK(c.total_visits == d.total_visits);
}

TEST_CASE("chunk seeds are distinct and stable") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t c = 0; c < 1000; ++c) seeds.insert(chunk_seed(0, c));
  CHECK(seeds.size() == 1000);
  CHECK(chunk_seed(0, 0) == chunk_seed(0, 0));
  CHECK(chunk_seed(1, 0) != chunk_seed(0, 0));
}

TEST_CASE("visit statistics") {
  // The only path to (2,1) is 100, touching the diagonal y = x at (0,0) and (1,1).
  const auto one = visits_statistic(1, 0, 50, 0);
  CHECK(one.mean == 2.0);
  CHECK(one.std_error == 0.0);
  CHECK_THROWS_AS(visits_statistic(0, 1, 10, 0), Error);
  CHECK_THROWS_AS(visits_statistic(5, -1, 10, 0), Error);

  // Exhaustive mean over every path to (6,5) at distance 1.
  double total = 0;
  const auto paths = oracle::dyck_words(6, 5);
  for (const auto& w : paths) {
    int x = 0, y = 0;
    for (char ch : w) {
      (ch == '1' ? y : x) += 1;
      if (y - x == 1) total += 1;
    }
  }
  const double exact = total / static_cast<double>(paths.size());
  const auto est = visits_statistic(5, 1, 200000, 8);
  CHECK(std::abs(est.mean - exact) < 5 * est.std_error);
}

TEST_CASE("format_significant") {
  CHECK(format_significant(mpf_class(815215)) == "8.15215e+05");
  CHECK(format_significant(mpf_class(0.5), 3) == "5.00e-01");
}
