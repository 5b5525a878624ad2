#include "doctest.h"

#include <random>

#include "kmroots/lattice.hpp"
#include "kmroots/peterson.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

const Rank2Cartan r3(3);

SignedWeight sw(long c0, long c1) { return {c0, c1}; }

}  // namespace

TEST_CASE("cartan parameter must be hyperbolic") {
  CHECK_THROWS_AS(Rank2Cartan(2), Error);
  CHECK_THROWS_AS(Rank2Cartan(-5), Error);
  CHECK(Rank2Cartan(3).r() == 3);
}

TEST_CASE("weights reject negative coordinates") {
  CHECK_THROWS_AS(Weight(-1, 0), Error);
  CHECK_THROWS_AS(Weight::from_signed(sw(2, -1)), Error);
  CHECK(Weight::from_signed(sw(2, 1)) == Weight(2, 1));
}

TEST_CASE("bilinear form") {
  CHECK(bilinear_form(Weight(1, 0), Weight(1, 0), r3) == 2);
  CHECK(bilinear_form(Weight(1, 0), Weight(0, 1), r3) == -3);
  CHECK(bilinear_form(Weight(4, 3), Weight(4, 3), r3) == -22);
}

TEST_CASE("simple reflections") {
  CHECK(simple_reflection(0, sw(0, 1), r3) == sw(3, 1));
  CHECK(simple_reflection(0, simple_reflection(1, sw(1, 0), r3), r3) == sw(8, 3));
  CHECK(simple_reflection(0, sw(1, 0), r3) == sw(-1, 0));
  CHECK_THROWS_AS(simple_reflection(2, sw(1, 0), r3), Error);
}

TEST_CASE("form is symmetric and Weyl invariant; reflections are involutions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-40, 40);
  for (std::int64_t r : {3, 4, 5, 7}) {
    const Rank2Cartan cartan(r);
    for (int trial = 0; trial < 500; ++trial) {
      const SignedWeight u = sw(coord(rng), coord(rng));
      const SignedWeight v = sw(coord(rng), coord(rng));
      CHECK(bilinear_form(u, v, cartan) == bilinear_form(v, u, cartan));
      for (int i : {0, 1}) {
        const auto su = simple_reflection(i, u, cartan);
        const auto sv = simple_reflection(i, v, cartan);
        CHECK(bilinear_form(su, sv, cartan) == bilinear_form(u, v, cartan));
        CHECK(simple_reflection(i, su, cartan) == u);
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(Weight(8, 3), r3) == RootClass::RealRoot);
  CHECK(classify(Weight(1, 1), r3) == RootClass::ImaginaryRoot);
  CHECK(classify(Weight(2, 0), r3) == RootClass::NotARoot);
  CHECK(classify(Weight(21, 8), r3) == RootClass::RealRoot);
  CHECK(classify(Weight(0, 1), r3) == RootClass::RealRoot);
  CHECK_THROWS_WITH_AS(classify(Weight(0, 0), r3), "zero weight has no root class", Error);
}

TEST_CASE("classify is symmetric under the diagram flip") {
  for (std::int64_t r : {3, 4, 5}) {
    const Rank2Cartan cartan(r);
    for (long a = 0; a <= 30; ++a) {
      for (long b = 0; b <= 30; ++b) {
        if (a + b == 0) continue;
        CHECK(classify(Weight(a, b), cartan) == classify(Weight(b, a), cartan));
      }
    }
  }
}

TEST_CASE("classify agrees with the multiplicity oracle") {
  for (std::int64_t r : {3, 4}) {
    const Rank2Cartan cartan(r);
    MultiplicityTable table(cartan);
    table.ensure(Weight(12, 12));
    for (long a = 0; a <= 12; ++a) {
      for (long b = 0; a + b <= 12; ++b) {
        if (a + b == 0) continue;
        CAPTURE(r);
        CAPTURE(a);
        CAPTURE(b);
        const bool root = classify(Weight(a, b), cartan) != RootClass::NotARoot;
        CHECK(root == (table.mult(a, b) > 0));
      }
    }
  }
}

TEST_CASE("dyck_count") {
  CHECK(dyck_count(4, 3) == 5);
  CHECK(dyck_count(1, 1) == 1);
  CHECK(dyck_count(2, 3) == 2);
  CHECK_THROWS_WITH_AS(dyck_count(4, 2), "count formula requires coprime endpoint", Error);
  CHECK_THROWS_AS(dyck_count(0, 1), Error);
  // binomial(101, 50) / 101, far past 64 bits
  CHECK(dyck_count(51, 50).get_str() == "1978261657756160653623774456");
}

TEST_CASE("dyck_count matches exhaustive enumeration") {
  for (int n = 1; n <= 13; ++n) {
    for (int m = 1; n + m <= 14; ++m) {
      if (oracle::gcd(n, m) != 1) continue;
      CAPTURE(n);
      CAPTURE(m);
      CHECK(dyck_count(n, m) == static_cast<long>(oracle::dyck_words(n, m).size()));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(31, 15) == 300540195);
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
  CHECK(mobius(97) == -1);
  CHECK_THROWS_AS(mobius(0), Error);
}
