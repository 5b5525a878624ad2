#include "kmroots/peterson.hpp"

#include <numeric>
#include <ostream>

namespace kmroots {

namespace {

std::int64_t form(std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1,
                  std::int64_t r) {
  return 2 * (a0 * b0 + a1 * b1) - r * (a0 * b1 + a1 * b0);
}

std::pair<std::int64_t, std::int64_t> table_coords(const Weight& w) {
  return {small_coordinate(w.c0, kMaxTableCoordinate, "multiplicity table"),
          small_coordinate(w.c1, kMaxTableCoordinate, "multiplicity table")};
}

}  // namespace

MultiplicityTable::MultiplicityTable(const Rank2Cartan& cartan) : cartan_(cartan) {}

void MultiplicityTable::ensure(const Weight& box) {
  const auto [b0, b1] = table_coords(box);
  if (b0 < c0_size_ && b1 < c1_size_) return;

  const std::int64_t new0 = std::max(b0 + 1, c0_size_);
  const std::int64_t new1 = std::max(b1 + 1, c1_size_);
  const auto cells = static_cast<std::size_t>(new0 * new1);
  std::vector<ExactRational> c(cells);
  std::vector<BigInt> mult(cells);
  std::vector<char> done(cells, 0);
  for (std::int64_t i = 0; i < c0_size_; ++i) {
    for (std::int64_t j = 0; j < c1_size_; ++j) {
      const auto to = static_cast<std::size_t>(i * new1 + j);
      c[to] = std::move(c_[index(i, j)]);
      mult[to] = std::move(mult_[index(i, j)]);
      done[to] = done_[index(i, j)];
    }
  }
  c_ = std::move(c);
  mult_ = std::move(mult);
  done_ = std::move(done);
  c0_size_ = new0;
  c1_size_ = new1;

  // Lexicographic order: every proper summand of (i, j) precedes it.
  for (std::int64_t i = 0; i < c0_size_; ++i) {
    for (std::int64_t j = 0; j < c1_size_; ++j) {
      if (!done_[index(i, j)]) compute_entry(i, j);
    }
  }
}

void MultiplicityTable::compute_entry(std::int64_t b0, std::int64_t b1) {
  const std::int64_t r = cartan_.r();
  const std::size_t at = index(b0, b1);
  done_[at] = 1;
  if (b0 + b1 == 0) {
    c_[at] = 0;
    mult_[at] = 0;
    return;
  }
  if (b0 + b1 == 1) {
    c_[at] = 1;
    mult_[at] = 1;
    return;
  }

  // Ordered pairs come in mirror images (p, beta - p); sum p < beta - p twice
  // and the midpoint once.
  ExactRational numerator = 0;
  ExactRational term;
  for (std::int64_t i = 0; i <= b0; ++i) {
    for (std::int64_t j = 0; j <= b1; ++j) {
      const std::int64_t i2 = b0 - i, j2 = b1 - j;
      if (i + j == 0 || i2 + j2 == 0) continue;
      if (i > i2 || (i == i2 && j > j2)) continue;
      const ExactRational& left = c_[index(i, j)];
      const ExactRational& right = c_[index(i2, j2)];
      if (sgn(left) == 0 || sgn(right) == 0) continue;
      const std::int64_t f = form(i, j, i2, j2, r);
      if (f == 0) continue;
      term = left * right;
      term *= (i == i2 && j == j2) ? f : 2 * f;
      numerator += term;
    }
  }

  const std::int64_t gcd = std::gcd(b0, b1);
  const std::int64_t denominator = form(b0, b1, b0, b1, r) - 2 * (b0 + b1);
  if (denominator == 0) {
    if (sgn(numerator) != 0) {
      throw Error("Peterson denominator vanishes with nonzero numerator at (" +
                  std::to_string(b0) + "," + std::to_string(b1) + ")");
    }
    // The recursion is silent here. Such a weight has norm 2 * height >= 4, so
    // it is not a root and c_beta = sum_{d > 1} m_{beta/d} / d. This is nonzero
    // on multiples of real roots, e.g. (4, 12) = 4 * (1, 3) for r = 3.
    ExactRational c = 0;
    for (std::int64_t d = 2; d <= gcd; ++d) {
      if (gcd % d == 0) c += ExactRational(mult_[index(b0 / d, b1 / d)], d);
    }
    c.canonicalize();
    c_[at] = std::move(c);
  } else {
    numerator /= denominator;
    c_[at] = std::move(numerator);
  }

  // Moebius inversion over common divisors.
  ExactRational m = 0;
  for (std::int64_t d = 1; d <= gcd; ++d) {
    if (gcd % d != 0) continue;
    const int mu = mobius(static_cast<std::uint64_t>(d));
    if (mu == 0) continue;
    m += ExactRational(mu, d) * c_[index(b0 / d, b1 / d)];
  }
  if (m.get_den() != 1 || sgn(m) < 0) {
    throw Error("internal consistency: multiplicity at (" + std::to_string(b0) + "," +
                std::to_string(b1) + ") evaluated to " + m.get_str());
  }
  mult_[at] = m.get_num();
}

ExactRational peterson_c(const Weight& weight, MultiplicityTable& table) {
  if (weight.is_zero()) throw Error("Peterson coefficient undefined for the zero weight");
  table.ensure(weight);
  const auto [b0, b1] = table_coords(weight);
  return table.c(b0, b1);
}

BigInt multiplicity(const Weight& weight, MultiplicityTable& table) {
  if (weight.is_zero()) throw Error("multiplicity undefined for the zero weight");
  table.ensure(weight);
  const auto [b0, b1] = table_coords(weight);
  return table.mult(b0, b1);
}

BigInt multiplicity(const Weight& weight, const Rank2Cartan& cartan) {
  MultiplicityTable table(cartan);
  return multiplicity(weight, table);
}

std::vector<std::pair<Weight, BigInt>> positive_roots_up_to(const Weight& box,
                                                            const Rank2Cartan& cartan) {
  std::vector<std::pair<Weight, BigInt>> out;
  if (box.is_zero()) return out;
  MultiplicityTable table(cartan);
  table.ensure(box);
  const auto [b0, b1] = table_coords(box);
  for (std::int64_t i = 0; i <= b0; ++i) {
    for (std::int64_t j = 0; j <= b1; ++j) {
      const BigInt& m = table.mult(i, j);
      if (m > 0) out.emplace_back(Weight(i, j), m);
    }
  }
  return out;
}

BigInt kostant_count(const Weight& weight, const Rank2Cartan& cartan) {
  const auto [g0, g1] = table_coords(weight);
  const std::int64_t w1 = g1 + 1;
  std::vector<BigInt> count(static_cast<std::size_t>((g0 + 1) * w1), 0);
  count[0] = 1;
  if (weight.is_zero()) return count[0];

  std::vector<BigInt> coef;
  for (const auto& [root, m] : positive_roots_up_to(weight, cartan)) {
    const std::int64_t r0 = root.c0.get_si(), r1 = root.c1.get_si();
    // (1 - x)^{-m} = sum_k binomial(m + k - 1, k) x^k
    const std::int64_t kmax = std::min(r0 ? g0 / r0 : g1 / r1, r1 ? g1 / r1 : g0 / r0);
    coef.assign(static_cast<std::size_t>(kmax + 1), 0);
    coef[0] = 1;
    for (std::int64_t k = 1; k <= kmax; ++k) {
      coef[k] = coef[k - 1] * (m + (k - 1));
      mpz_divexact_ui(coef[k].get_mpz_t(), coef[k].get_mpz_t(),
                      static_cast<unsigned long>(k));
    }
    // Descending order keeps count[cell - k*root] at its pre-root value.
    for (std::int64_t i = g0; i >= 0; --i) {
      for (std::int64_t j = g1; j >= 0; --j) {
        BigInt& cell = count[static_cast<std::size_t>(i * w1 + j)];
        for (std::int64_t k = 1; k * r0 <= i && k * r1 <= j; ++k) {
          const auto from = static_cast<std::size_t>((i - k * r0) * w1 + (j - k * r1));
          if (count[from] != 0) cell += coef[k] * count[from];
        }
      }
    }
  }
  return count.back();
}

void write_multiplicity_csv(std::ostream& os, const Weight& box, const Rank2Cartan& cartan) {
  MultiplicityTable table(cartan);
  os << "c0,c1,norm,class,multiplicity\n";
  if (box.is_zero()) return;
  table.ensure(box);
  const auto [b0, b1] = table_coords(box);
  for (std::int64_t i = 0; i <= b0; ++i) {
    for (std::int64_t j = 0; j <= b1; ++j) {
      if (i + j == 0) continue;
      const Weight w(i, j);
      os << i << ',' << j << ',' << bilinear_form(w, w, cartan).get_str() << ','
         << to_string(classify(w, cartan)) << ',' << table.mult(i, j).get_str() << '\n';
    }
  }
}

}  // namespace kmroots
