#pragma once

// Determinantal curves in P^3: the ideal is generated by the maximal minors
// of an s x (s+1) matrix of linear forms, with resolution
//
//   0 -> O(-s-1)^s --phi--> O(-s)^(s+1) -> J_C -> 0.
//
// All cohomology of J_C(n) and O_C(n) follows from this shape, plus
// H^1(J_C(n)) = 0 for every n (the curve is arithmetically Cohen-Macaulay).

#include "modnum/arith.hpp"
#include "modnum/p3cohom.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace modnum {

inline constexpr std::int64_t kMaxCurveParameter = 1'000'000;

/// An integer twist bound that may be +infinity.
struct TwistBound {
  std::optional<std::int64_t> value;  // nullopt means +infinity

  static TwistBound infinity() { return {}; }
  static TwistBound finite(std::int64_t v) { return {v}; }

  bool is_infinite() const { return !value.has_value(); }
  bool exceeds(std::int64_t x) const { return is_infinite() || *value > x; }
  bool at_least(std::int64_t x) const { return is_infinite() || *value >= x; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(*value); }

  friend bool operator==(const TwistBound&, const TwistBound&) = default;
};

struct DeterminantalCurve {
  std::int64_t s = 1;
  std::int64_t degree = 1;
  std::int64_t genus = 0;
  FreeSheafSum syzygies;   // O(-s-1)^s
  FreeSheafSum generators; // O(-s)^(s+1)
};

struct CurveInvariants {
  std::int64_t s_of_C = 0;
  std::int64_t e_of_C = 0;
  TwistBound t_of_C;
  /// H^0(N*_C(tau)) = 0 for tau < nstar_bound.
  std::int64_t nstar_bound = 0;
  /// H^0(J_C^2(tau)) = 0 for tau < jsq_bound.
  std::int64_t jsq_bound = 0;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

inline DeterminantalCurve determinantal_curve(std::int64_t s) {
  if (s < 1) {
    throw std::domain_error("determinantal_curve: s must be >= 1, got " +
                                std::to_string(s));
  }
  if (s > kMaxCurveParameter) {
    throw std::domain_error("determinantal_curve: s too large: " + std::to_string(s));
  }
  DeterminantalCurve c;
  c.s = s;
  c.syzygies.add(-s - 1, s);
  c.generators.add(-s, s + 1);
  c.degree = s * (s + 1) / 2;
  // chi(O_C) = chi(O) - chi(J) and chi(J) = chi(B) - chi(A).
  const BigInt chi_oc = 1 - chi_free_sum(c.generators, 0) + chi_free_sum(c.syzygies, 0);
  c.genus = to_int64(1 - chi_oc);
  return c;
}

inline BigInt h_curve_structure(const DeterminantalCurve& c, int i, std::int64_t n);

/// h^i(P^3, J_C(n)).
inline BigInt h_ideal(const DeterminantalCurve& c, int i, std::int64_t n) {
  check_p3_index(i);
  switch (i) {
    case 0: {
      // phi is injective on global sections (H^0 is left exact), so the
      // sections of J(n) are the cokernel H^0(B(n)) / H^0(A(n)).
      BigInt h0 = h_free_sum(0, c.generators, n) - h_free_sum(0, c.syzygies, n);
      if (h0 < 0) {
        throw std::logic_error("h_ideal: negative h^0 at n=" + std::to_string(n));
      }
      return h0;
    }
    case 1:
      return 0;
    case 2:
      return h_curve_structure(c, 1, n);
    default:
      return h_line(3, n);
  }
}

/// h^i(C, O_C(n)) for i in {0, 1}.
inline BigInt h_curve_structure(const DeterminantalCurve& c, int i, std::int64_t n) {
  if (i < 0 || i > 1) {
    throw std::out_of_range("h_curve_structure: index must be 0 or 1, got " +
                            std::to_string(i));
  }
  // H^1(J(n)) = 0, so H^0(O(n)) -> H^0(O_C(n)) is onto.
  BigInt h0 = h_line(0, n) - h_ideal(c, 0, n);
  if (i == 0) {
    return h0;
  }
  BigInt chi = BigInt(c.degree) * n + 1 - c.genus;
  BigInt h1 = h0 - chi;
  if (h1 < 0) {
    throw std::logic_error("h_curve_structure: negative h^1 at n=" + std::to_string(n));
  }
  return h1;
}

/// chi(J_C(n)) summed from the four cohomology dimensions.
inline BigInt chi_ideal(const DeterminantalCurve& c, std::int64_t n) {
  return h_ideal(c, 0, n) - h_ideal(c, 1, n) + h_ideal(c, 2, n) - h_ideal(c, 3, n);
}

inline CurveInvariants curve_invariants(const DeterminantalCurve& c) {
  CurveInvariants inv;

  // s(C): first twist carrying a surface through C. J(n) has no sections for
  // n <= 0 on a curve, so start at 0.
  std::int64_t n = 0;
  while (h_ideal(c, 0, n) == 0) ++n;
  inv.s_of_C = n;

  // e(C): last twist with h^1(O_C) != 0. h^1(O_C(n)) = 0 once d*n > 2g-2.
  const std::int64_t above_canonical =
      to_int64(floor_of(Rational(2 * c.genus - 2, c.degree))) + 1;
  n = std::max(above_canonical, c.s);
  while (h_curve_structure(c, 1, n) == 0) --n;
  inv.e_of_C = n;

  for (std::int64_t m = -5; m <= 3 * c.s; ++m) {
    if (h_ideal(c, 1, m) != 0) {
      throw std::logic_error("curve_invariants: h^1(J(n)) != 0 at n=" + std::to_string(m));
    }
  }
  inv.t_of_C = TwistBound::infinity();

  inv.nstar_bound = c.s;
  inv.jsq_bound = 2 * c.s;
  return inv;
}

}  // namespace modnum
