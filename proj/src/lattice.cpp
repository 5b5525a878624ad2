#include "kmroots/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace kmroots {

Rank2Cartan::Rank2Cartan(std::int64_t r) : r_(r) {
  if (r < 3) {
    throw Error("Cartan parameter r must be at least 3, got " + std::to_string(r));
  }
  // Keeps a^2 + b^2 - r*a*b inside 128 bits for all admissible run lengths.
  if (r > (std::int64_t{1} << 20)) {
    throw Error("Cartan parameter r is too large: " + std::to_string(r));
  }
}

Weight::Weight(BigInt a0, BigInt a1) : c0(std::move(a0)), c1(std::move(a1)) {
  if (c0 < 0 || c1 < 0) {
    throw Error("weight coordinates must be nonnegative, got " + c0.get_str() + "," +
                c1.get_str());
  }
}

Weight Weight::from_signed(const SignedWeight& v) { return Weight(v.c0, v.c1); }

std::string Weight::to_string() const { return c0.get_str() + "," + c1.get_str(); }

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << "(" << w.c0 << ", " << w.c1 << ")";
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::RealRoot:
      return "real";
    case RootClass::ImaginaryRoot:
      return "imaginary";
    case RootClass::NotARoot:
      return "not_a_root";
  }
  return "unknown";
}

BigInt bilinear_form(const SignedWeight& u, const SignedWeight& v,
                     const Rank2Cartan& cartan) {
  BigInt diag = 2 * (u.c0 * v.c0 + u.c1 * v.c1);
  BigInt off = u.c0 * v.c1 + u.c1 * v.c0;
  return diag - BigInt(static_cast<long>(cartan.r())) * off;
}

BigInt bilinear_form(const Weight& u, const Weight& v, const Rank2Cartan& cartan) {
  return bilinear_form(u.to_signed(), v.to_signed(), cartan);
}

SignedWeight simple_reflection(int i, const SignedWeight& v, const Rank2Cartan& cartan) {
  const BigInt r(static_cast<long>(cartan.r()));
  switch (i) {
    case 0:
      return {r * v.c1 - v.c0, v.c1};
    case 1:
      return {v.c0, r * v.c0 - v.c1};
    default:
      throw Error("simple reflection index must be 0 or 1, got " + std::to_string(i));
  }
}

RootClass classify(const Weight& v, const Rank2Cartan& cartan) {
  if (v.is_zero()) throw Error("zero weight has no root class");
  if (bilinear_form(v, v, cartan) <= 0) return RootClass::ImaginaryRoot;
  if (bilinear_form(v, v, cartan) != 2) return RootClass::NotARoot;

  // Weyl descent: the height strictly decreases until a simple root is hit or
  // no reflection helps. Positive coordinates are preserved on the way down
  // for genuine real roots, so leaving Q+ certifies a non-root.
  SignedWeight w = v.to_signed();
  while (true) {
    if ((w.c0 == 1 && w.c1 == 0) || (w.c0 == 0 && w.c1 == 1)) return RootClass::RealRoot;
    if (w.c0 < 0 || w.c1 < 0) return RootClass::NotARoot;
    const BigInt height = w.c0 + w.c1;
    bool moved = false;
    for (int i = 0; i < 2 && !moved; ++i) {
      SignedWeight next = simple_reflection(i, w, cartan);
      if (next.c0 + next.c1 < height) {
        w = std::move(next);
        moved = true;
      }
    }
    if (!moved) return RootClass::NotARoot;
  }
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
  }
  return acc;
}

BigInt dyck_count(const BigInt& n, const BigInt& m) {
  if (n < 1 || m < 1) throw Error("endpoint coordinates must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw Error("count formula requires coprime endpoint");
  const BigInt total = n + m;
  if (!total.fits_ulong_p()) throw Error("endpoint too large for exact binomial");
  BigInt c = binomial(total.get_ui(), n.get_ui());
  mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), total.get_mpz_t());
  return c;
}

int mobius(std::uint64_t d) {
  if (d < 1) throw Error("mobius is defined for d >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p <= d / p; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::int64_t small_coordinate(const BigInt& v, std::int64_t limit, const char* what) {
  if (v < 0 || v > BigInt(static_cast<long>(limit))) {
    throw Error(std::string(what) + " coordinate " + v.get_str() + " exceeds limit " +
                std::to_string(limit));
  }
  return v.get_si();
}

}  // namespace kmroots
