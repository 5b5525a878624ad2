#pragma once

// Root lattice of the rank-2 symmetric hyperbolic Kac-Moody algebra with
// Cartan matrix [[2, -r], [-r, 2]], r >= 3.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kmroots {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Raised for precondition violations on public operations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rank2Cartan {
 public:
  /// Throws Error unless r >= 3.
  explicit Rank2Cartan(std::int64_t r);

  std::int64_t r() const noexcept { return r_; }

  friend bool operator==(const Rank2Cartan&, const Rank2Cartan&) = default;

 private:
  std::int64_t r_;
};

/// c0 * alpha_0 + c1 * alpha_1 with arbitrary signs; only produced by
/// reflections and the Littelmann root recurrence.
struct SignedWeight {
  BigInt c0;
  BigInt c1;

  friend bool operator==(const SignedWeight& a, const SignedWeight& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
};

/// A point of the positive root lattice Q+.
struct Weight {
  BigInt c0;
  BigInt c1;

  Weight() = default;
  Weight(BigInt a0, BigInt a1);

  /// Throws Error if either coordinate is negative.
  static Weight from_signed(const SignedWeight& v);

  SignedWeight to_signed() const { return {c0, c1}; }
  bool is_zero() const { return c0 == 0 && c1 == 0; }
  BigInt height() const { return c0 + c1; }
  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.c0 < b.c0 || (a.c0 == b.c0 && a.c1 < b.c1);
  }
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

enum class RootClass { RealRoot, ImaginaryRoot, NotARoot };

std::string to_string(RootClass c);

BigInt bilinear_form(const SignedWeight& u, const SignedWeight& v,
                     const Rank2Cartan& cartan);
BigInt bilinear_form(const Weight& u, const Weight& v, const Rank2Cartan& cartan);

/// s_i(v) = v - <v, alpha_i> alpha_i for i in {0, 1}.
SignedWeight simple_reflection(int i, const SignedWeight& v, const Rank2Cartan& cartan);

/// Real roots are certified by Weyl descent to a simple root, imaginary roots
/// by nonpositive norm. Throws Error on the zero weight.
RootClass classify(const Weight& v, const Rank2Cartan& cartan);

/// binomial(n, k) by the running product with exact division.
BigInt binomial(unsigned long n, unsigned long k);

/// Number of rational Dyck paths from (0,0) to (n,m): binomial(m+n, n)/(m+n).
/// Throws Error unless n, m >= 1 and gcd(m, n) = 1.
BigInt dyck_count(const BigInt& n, const BigInt& m);

/// Moebius function; throws Error for d < 1.
int mobius(std::uint64_t d);

/// Converts a weight coordinate to a machine integer, throwing Error with
/// `what` in the message when it exceeds `limit`.
std::int64_t small_coordinate(const BigInt& v, std::int64_t limit, const char* what);

}  // namespace kmroots

template <>
struct std::hash<kmroots::Weight> {
  std::size_t operator()(const kmroots::Weight& w) const noexcept {
    std::size_t h0 = std::hash<std::string>{}(w.c0.get_str(16));
    std::size_t h1 = std::hash<std::string>{}(w.c1.get_str(16));
    return h0 ^ (h1 + 0x9e3779b97f4a7c15ULL + (h0 << 6) + (h0 >> 2));
  }
};
