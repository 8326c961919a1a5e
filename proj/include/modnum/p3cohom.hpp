#pragma once

// Cohomology of O_{P^3}(n) and of finite direct sums of line bundles.

#include "modnum/arith.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modnum {

/// One summand O(twist)^multiplicity.
struct FreeTerm {
  std::int64_t twist = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
};

/// A direct sum of twisted line bundles on P^3. The empty sum is the zero sheaf.
class FreeSheafSum {
 public:
  FreeSheafSum() = default;
  FreeSheafSum(std::initializer_list<FreeTerm> terms) {
    for (const auto& t : terms) add(t.twist, t.multiplicity);
  }

  FreeSheafSum& add(std::int64_t twist, std::int64_t multiplicity) {
    if (multiplicity < 1) {
      throw std::invalid_argument("FreeSheafSum: multiplicity must be >= 1, got " +
                                  std::to_string(multiplicity));
    }
    terms_.push_back({twist, multiplicity});
    return *this;
  }

  const std::vector<FreeTerm>& terms() const { return terms_; }

  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const auto& t : terms_) r += t.multiplicity;
    return r;
  }

  bool empty() const { return terms_.empty(); }

  friend bool operator==(const FreeSheafSum&, const FreeSheafSum&) = default;

 private:
  std::vector<FreeTerm> terms_;
};

inline void check_p3_index(int i) {
  if (i < 0 || i > 3) {
    throw std::out_of_range("cohomology index on P^3 must be in 0..3, got " +
                            std::to_string(i));
  }
}

/// h^i(P^3, O(n)). Only h^0 and h^3 can be nonzero.
inline BigInt h_line(int i, std::int64_t n) {
  check_p3_index(i);
  switch (i) {
    case 0:
      return binom_trunc(n + 3, 3);
    case 3:
      return binom_trunc(-n - 1, 3);
    default:
      return 0;
  }
}

/// chi(P^3, O(n)) as a polynomial in n, valid for every integer n.
inline BigInt chi_line(std::int64_t n) { return binom_poly(n + 3, 3); }

inline BigInt h_free_sum(int i, const FreeSheafSum& sum, std::int64_t n) {
  check_p3_index(i);
  BigInt total = 0;
  for (const auto& t : sum.terms()) {
    total += t.multiplicity * h_line(i, t.twist + n);
  }
  return total;
}

inline BigInt chi_free_sum(const FreeSheafSum& sum, std::int64_t n) {
  BigInt total = 0;
  for (const auto& t : sum.terms()) {
    total += t.multiplicity * chi_line(t.twist + n);
  }
  return total;
}

}  // namespace modnum
