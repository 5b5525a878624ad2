#pragma once

// Root multiplicities from Peterson's recursion.
//
// With (beta | 2 rho) = 2 * height(beta) for a symmetric rank-2 matrix,
//
//   ((beta|beta) - 2 ht(beta)) c_beta = sum over ordered pairs beta' + beta'' = beta,
//                                       beta', beta'' in Q+ \ {0}, of (beta'|beta'') c_beta' c_beta''
//
// with c = 1 on simple roots, and m_beta = sum_{d | beta} mu(d)/d c_{beta/d}.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "kmroots/lattice.hpp"

namespace kmroots {

inline constexpr std::int64_t kMaxTableCoordinate = 2048;

/// Dense memo of c_beta and m_beta over a box [0, c0_max] x [0, c1_max]. Grows
/// on demand; entries are filled in lexicographic order so every summand of a
/// recursion step is already present. Not safe for concurrent extension.
class MultiplicityTable {
 public:
  explicit MultiplicityTable(const Rank2Cartan& cartan);

  const Rank2Cartan& cartan() const { return cartan_; }

  /// Makes sure every weight <= box componentwise is tabulated.
  void ensure(const Weight& box);

  std::int64_t c0_extent() const { return c0_size_; }
  std::int64_t c1_extent() const { return c1_size_; }

  /// Entries for tabulated weights; (0, 0) holds c = 0, m = 0.
  const ExactRational& c(std::int64_t c0, std::int64_t c1) const {
    return c_[index(c0, c1)];
  }
  const BigInt& mult(std::int64_t c0, std::int64_t c1) const {
    return mult_[index(c0, c1)];
  }

 private:
  std::size_t index(std::int64_t c0, std::int64_t c1) const {
    return static_cast<std::size_t>(c0 * c1_size_ + c1);
  }
  void compute_entry(std::int64_t c0, std::int64_t c1);

  Rank2Cartan cartan_;
  std::int64_t c0_size_ = 0;
  std::int64_t c1_size_ = 0;
  std::vector<ExactRational> c_;
  std::vector<BigInt> mult_;
  std::vector<char> done_;
};

/// c_beta; throws Error on the zero weight or when the recursion denominator
/// vanishes against a nonzero numerator.
ExactRational peterson_c(const Weight& weight, MultiplicityTable& table);

BigInt multiplicity(const Weight& weight, MultiplicityTable& table);
BigInt multiplicity(const Weight& weight, const Rank2Cartan& cartan);

/// Positive roots inside the box with their multiplicities, ordered by
/// (c0, c1).
std::vector<std::pair<Weight, BigInt>> positive_roots_up_to(const Weight& box,
                                                            const Rank2Cartan& cartan);

/// Coefficient of e^weight in prod_{beta > 0} (1 - e^beta)^{-m_beta}.
BigInt kostant_count(const Weight& weight, const Rank2Cartan& cartan);

/// CSV with header c0,c1,norm,class,multiplicity for every nonzero weight in
/// the box.
void write_multiplicity_csv(std::ostream& os, const Weight& box, const Rank2Cartan& cartan);

}  // namespace kmroots
