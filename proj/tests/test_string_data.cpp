#include "doctest.h"

#include <random>

#include "kmroots/filters.hpp"
#include "kmroots/string_data.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

const Rank2Cartan r3(3);

StringData runs(std::initializer_list<Run> list) { return StringData{list}; }

}  // namespace

TEST_CASE("word_to_runs") {
  CHECK(word_to_runs("1101000") == runs({2, 1, 1, 3}));
  CHECK(word_to_runs("1111111") == runs({7}));
  CHECK(word_to_runs("0111") == runs({0, 1, 3}));
  CHECK(word_to_runs("").runs.empty());
  CHECK_THROWS_AS(word_to_runs("10a1"), Error);
}

TEST_CASE("runs_to_word") {
  CHECK(runs_to_word(runs({2, 2, 5, 6})) == "110011111000000");
  CHECK(runs_to_word(runs({})).empty());
  CHECK(runs_to_word(runs({0, 2, 1})) == "001");
  CHECK_THROWS_AS(runs_to_word(runs({1, 0, 2})), Error);
  CHECK_THROWS_AS(runs_to_word(runs({-1, 2})), Error);
}

TEST_CASE("parse_runs") {
  CHECK(parse_runs("2,1,1,3") == runs({2, 1, 1, 3}));
  CHECK(parse_runs("").runs.empty());
  CHECK_THROWS_AS(parse_runs("2,,3"), Error);
  CHECK_THROWS_AS(parse_runs("2,x"), Error);
}

TEST_CASE("word/run round trips on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto len = std::uniform_int_distribution<int>(0, 40)(rng);
    std::string word;
    for (int i = 0; i < len; ++i) word.push_back(rng() & 1 ? '1' : '0');
    const StringData data = word_to_runs(word);
    REQUIRE(data.is_canonical());
    CHECK(runs_to_word(data) == word);
    CHECK(word_to_runs(runs_to_word(data)) == data);
    const Weight w = weight_of(data);
    CHECK(w.c1 == static_cast<long>(std::count(word.begin(), word.end(), '1')));
    CHECK(w.c0 == static_cast<long>(std::count(word.begin(), word.end(), '0')));
  }
}

TEST_CASE("weight_of") {
  CHECK(weight_of(runs({2, 1, 1, 3})) == Weight(4, 3));
  CHECK(weight_of(runs({7})) == Weight(0, 7));
  CHECK(weight_of(runs({10, 3, 5, 13})) == Weight(16, 15));
}

TEST_CASE("is_dyck") {
  CHECK(is_dyck(runs({2, 1, 1, 3})));
  CHECK_FALSE(is_dyck(runs({1, 3, 2, 1})));
  CHECK(is_dyck(runs({1, 1})));
  CHECK_FALSE(is_dyck(runs({})));
  CHECK_FALSE(is_dyck(runs({3})));
  CHECK_FALSE(is_dyck(runs({0, 1, 1, 1})));
}

TEST_CASE("is_dyck agrees with the pointwise walk") {
  for (int total = 2; total <= 12; ++total) {
    for (int n = 1; n < total; ++n) {
      const int m = total - n;
      for (const auto& w : oracle::all_words(n, m)) {
        CAPTURE(w);
        CHECK(is_dyck(word_to_runs(w)) == oracle::above_diagonal(w, n, m));
      }
    }
  }
}

TEST_CASE("littelmann roots") {
  const auto beta = littelmann_roots(r3, 4);
  REQUIRE(beta.size() == 4);
  CHECK(beta[0] == SignedWeight{1, 0});
  CHECK(beta[1] == SignedWeight{3, 1});
  CHECK(beta[2] == SignedWeight{8, 3});
  CHECK(beta[3] == SignedWeight{21, 8});

  const auto beta4 = littelmann_roots(Rank2Cartan(4), 3);
  CHECK(beta4[2] == SignedWeight{15, 4});

  // The recurrence against explicit reflection words for the first terms.
  for (std::int64_t r : {3, 4, 5}) {
    const Rank2Cartan cartan(r);
    const auto seq = littelmann_roots(cartan, 4);
    const SignedWeight a0{1, 0}, a1{0, 1};
    CHECK(seq[0] == a0);
    CHECK(seq[1] == simple_reflection(0, a1, cartan));
    CHECK(seq[2] == simple_reflection(0, simple_reflection(1, a0, cartan), cartan));
    CHECK(seq[3] == simple_reflection(
                        0, simple_reflection(1, simple_reflection(0, a1, cartan), cartan),
                        cartan));
  }
}

TEST_CASE("littelmann roots for r = 3 have Fibonacci coordinates") {
  std::vector<long> fib{0, 1};
  while (fib.size() < 20) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const auto beta = littelmann_roots(r3, 8);
  for (std::size_t j = 1; j <= 8; ++j) {
    CAPTURE(j);
    CHECK(beta[j - 1].c0 == fib[2 * j]);
    CHECK(beta[j - 1].c1 == fib[2 * j - 2]);
  }
}

TEST_CASE("littelmann_valid") {
  CHECK_FALSE(littelmann_valid(word_to_runs("1010001"), r3));
  CHECK(littelmann_valid(word_to_runs("1110000"), r3));
  CHECK(littelmann_valid(runs({0, 1, 3}), r3));
  CHECK_FALSE(littelmann_valid(runs({0, 1, 4}), r3));
  CHECK(littelmann_valid(runs({5, 9}), r3));
  CHECK(littelmann_valid(runs({}), r3));
}

TEST_CASE("littelmann_valid matches the reflection-word oracle") {
  for (std::int64_t r : {3, 4}) {
    const Rank2Cartan cartan(r);
    for (int total = 1; total <= 11; ++total) {
      for (int zeros = 0; zeros <= total; ++zeros) {
        for (const auto& w : oracle::all_words(zeros, total - zeros)) {
          auto literal_runs = word_to_runs(w).runs;
          CAPTURE(w);
          CHECK(littelmann_valid(word_to_runs(w), cartan) ==
                oracle::littelmann_literal(literal_runs, r));
        }
      }
    }
  }
}

TEST_CASE("invalid words of weight (4,3)") {
  std::vector<std::string> invalid;
  for (const auto& w : oracle::all_words(4, 3)) {
    if (!littelmann_valid(word_to_runs(w), r3)) invalid.push_back(w);
  }
  CHECK(invalid == std::vector<std::string>{"0100011", "1010001", "1101000"});
  // 1000011 has runs (1,4,2); its only inequality 2 alpha_0 <= 4 (3 alpha_0 + alpha_1)
  // holds. Its transposition 0100011 = (0,1,1,3,2) fails 3 (3,1) <= 1 (8,3).
  CHECK(littelmann_valid(word_to_runs("1000011"), r3));
  CHECK(word_to_runs("0100011") == runs({0, 1, 1, 3, 2}));
}

TEST_CASE("count_valid_string_data") {
  CHECK(count_valid_string_data(Weight(4, 3), r3) == 32);
  CHECK(count_valid_string_data(Weight(0, 5), r3) == 1);
  CHECK(count_valid_string_data(Weight(1, 1), r3) == 2);
  CHECK(count_valid_string_data(Weight(0, 0), r3) == 1);
  // Both readings of the dimension quoted alongside the (4,3) example agree.
  CHECK(count_valid_string_data(Weight(3, 4), r3) == count_valid_string_data(Weight(4, 3), r3));
  CHECK_THROWS_AS(count_valid_string_data(Weight(13, 12), r3), Error);
  CHECK(count_valid_string_data(Weight(13, 12), r3, 25) > 0);
}

TEST_CASE("count_valid_string_data matches brute force over words") {
  for (std::int64_t r : {3, 4}) {
    const Rank2Cartan cartan(r);
    for (int zeros = 0; zeros <= 7; ++zeros) {
      for (int ones = 0; ones <= 7; ++ones) {
        long brute = 0;
        for (const auto& w : oracle::all_words(zeros, ones)) {
          if (oracle::littelmann_literal(word_to_runs(w).runs, r)) ++brute;
        }
        CHECK(count_valid_string_data(Weight(zeros, ones), cartan) == brute);
      }
    }
  }
}

TEST_CASE("Dyck paths satisfying cond1 are valid string data") {
  for (int n = 1; n <= 13; ++n) {
    for (int m = 1; n + m <= 14; ++m) {
      for (const auto& w : oracle::dyck_words(n, m)) {
        const StringData data = word_to_runs(w);
        if (cond1(data, r3)) {
          CAPTURE(w);
          CHECK(littelmann_valid(data, r3));
        }
      }
    }
  }
}
