#pragma once

// Serre-construction certificates for rank-2 bundles on a degree-delta
// hypersurface X, built from a determinantal curve C and a twist sigma:
//
//   0 -> O_X(-sigma) -> E -> J_{P/X}(sigma) -> 0,   P = C cap X,
//
// with c1(E) = 0 and c2(E) = delta (deg C - sigma^2). The vanishing criteria
// below only consult cohomology of J_C on P^3, which curves.hpp computes
// exactly. The second half of the file holds the c2 intervals in which the
// moduli space has components of two different dimensions.

#include "modnum/arith.hpp"
#include "modnum/curves.hpp"
#include "modnum/surfaces.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modnum {

// ---------------------------------------------------------------------------
// Vanishing transfer from C subset P^3 to P = C cap X.

/// Sufficient condition for H^0(X, J_{P/X}(tau)) = 0:
/// H^0(J_C(tau)) = H^1(J_C(tau - delta)) = 0.
inline bool lemma_b_vanishing(const DeterminantalCurve& c, std::int64_t delta,
                              std::int64_t tau) {
  return h_ideal(c, 0, tau) == 0 && h_ideal(c, 1, tau - delta) == 0;
}

/// Sufficient condition for H^0(X, E(tau)) = 0 in the construction with twist sigma.
inline bool cor_c_vanishing(const DeterminantalCurve& c, std::int64_t delta,
                            std::int64_t sigma, std::int64_t tau) {
  return tau < sigma && lemma_b_vanishing(c, delta, sigma + tau);
}

/// H^0(E) = 0, which implies stability since Pic(X) has rank one.
inline bool cor_d_stable(const DeterminantalCurve& c, std::int64_t delta, std::int64_t sigma) {
  return cor_c_vanishing(c, delta, sigma, 0);
}

/// Sufficient condition for H^0(X, J^2_{P/X}(n)) = 0: H^1(J_C(n - delta)),
/// H^0(J_C^2(n)) and H^0(N*_C(n - delta)) all vanish. The last two are read
/// off the curve's vanishing bounds.
inline bool lemma_i_vanishing(const DeterminantalCurve& c, std::int64_t delta,
                              std::int64_t n) {
  const auto inv = curve_invariants(c);
  return h_ideal(c, 1, n - delta) == 0 && n < inv.jsq_bound && n - delta < inv.nstar_bound;
}

/// Goodness of every extension of J_{P/X}(sigma) by O_X(-sigma).
inline bool prop_f_good(const DeterminantalCurve& c, std::int64_t delta, std::int64_t sigma) {
  return delta - 4 < 2 * sigma && lemma_b_vanishing(c, delta, delta - 4) &&
         lemma_i_vanishing(c, delta, 2 * sigma + delta - 4);
}

// ---------------------------------------------------------------------------
// Certificates.

struct ConstructionCertificate {
  std::int64_t delta = 0;
  std::int64_t s = 0;
  std::int64_t sigma = 0;
  std::int64_t curve_degree = 0;
  bool cond_a = false;  // 2 sigma - 4 <= e(C)
  bool cond_b = false;  // sigma < s(C) and sigma - delta < t(C)
  bool cond_c = false;  // delta - 4 < 2 sigma
  bool cond_d = false;  // delta - 4 < s(C)
  bool cond_e = false;  // 2 sigma - 4 <= t(C)
  bool cond_f = false;  // H^0(J_C^2(2 sigma + delta - 4)) = 0
  bool cond_g = false;  // H^0(N*_C(2 sigma - 4)) = 0
  bool stable = false;
  bool good = false;
  BigInt c2;
  BigInt exp_dim;

  std::vector<bool> conditions() const {
    return {cond_a, cond_b, cond_c, cond_d, cond_e, cond_f, cond_g};
  }
};

inline void check_construction_args(std::int64_t delta, std::int64_t s, std::int64_t sigma) {
  if (delta < 4) {
    throw std::domain_error("certificate: delta must be >= 4, got " + std::to_string(delta));
  }
  if (s < 1) {
    throw std::domain_error("certificate: s must be >= 1, got " + std::to_string(s));
  }
  if (sigma < 1) {
    throw std::domain_error("certificate: sigma must be >= 1, got " + std::to_string(sigma));
  }
}

inline ConstructionCertificate certificate(std::int64_t delta, std::int64_t s,
                                           std::int64_t sigma) {
  check_construction_args(delta, s, sigma);
  const auto curve = determinantal_curve(s);
  const auto inv = curve_invariants(curve);

  ConstructionCertificate cert;
  cert.delta = delta;
  cert.s = s;
  cert.sigma = sigma;
  cert.curve_degree = curve.degree;
  cert.cond_a = 2 * sigma - 4 <= inv.e_of_C;
  cert.cond_b = sigma < inv.s_of_C && inv.t_of_C.exceeds(sigma - delta);
  cert.cond_c = delta - 4 < 2 * sigma;
  cert.cond_d = delta - 4 < inv.s_of_C;
  cert.cond_e = inv.t_of_C.at_least(2 * sigma - 4);
  cert.cond_f = 2 * sigma + delta - 4 < inv.jsq_bound;
  cert.cond_g = 2 * sigma - 4 < inv.nstar_bound;
  cert.stable = cert.cond_b;
  cert.good = cert.cond_a && cert.cond_b && cert.cond_c && cert.cond_d && cert.cond_e &&
              cert.cond_f && cert.cond_g;
  cert.c2 = BigInt(delta) * (BigInt(curve.degree) - BigInt(sigma) * sigma);
  cert.exp_dim = expected_dim(hypersurface(delta), cert.c2);
  return cert;
}

struct OptimalParameters {
  std::int64_t s = 0;
  std::int64_t sigma = 0;
  BigInt c2_min;
};

/// Curve parameters giving the smallest c2 reached by the construction:
/// s = delta - 2 (even) or delta - 3 (odd), sigma = s / 2.
inline OptimalParameters optimal_parameters(std::int64_t delta) {
  if (delta < 4) {
    throw std::domain_error("optimal_parameters: delta must be >= 4, got " +
                            std::to_string(delta));
  }
  OptimalParameters p;
  p.s = delta % 2 == 0 ? delta - 2 : delta - 3;
  p.sigma = p.s / 2;
  p.c2_min = BigInt(delta) * p.sigma * (p.sigma + 1);

  const BigInt d = delta;
  const BigInt closed = delta % 2 == 0 ? d * d * (d - 2) / 4 : d * (d - 1) * (d - 3) / 4;
  if (p.c2_min != closed) {
    throw std::logic_error("optimal_parameters: c2_min disagrees with closed form at delta=" +
                           std::to_string(delta));
  }
  const auto cert = certificate(delta, p.s, p.sigma);
  if (!cert.good || cert.c2 != p.c2_min) {
    throw std::logic_error("optimal_parameters: construction not certified at delta=" +
                           std::to_string(delta));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Component intervals.

enum class IntervalLabel {
  good_tail,
  ogrady,
  two_component,
  semistable_two_component,
  odd_c1_two_component,
};

enum class Parity { even, odd };

inline constexpr std::string_view to_string(IntervalLabel label) {
  switch (label) {
    case IntervalLabel::good_tail: return "good_tail";
    case IntervalLabel::ogrady: return "ogrady";
    case IntervalLabel::two_component: return "two_component";
    case IntervalLabel::semistable_two_component: return "semistable_two_component";
    case IntervalLabel::odd_c1_two_component: return "odd_c1_two_component";
  }
  return "?";
}

inline constexpr std::string_view to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

inline std::optional<IntervalLabel> parse_interval_label(std::string_view name) {
  for (auto label : {IntervalLabel::good_tail, IntervalLabel::ogrady,
                     IntervalLabel::two_component, IntervalLabel::semistable_two_component,
                     IntervalLabel::odd_c1_two_component}) {
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

inline constexpr std::size_t kDefaultIntegerPointCap = 1'000'000;

/// A set of c2 values bounded by exact rationals. A missing upper bound means +infinity.
struct ComponentInterval {
  IntervalLabel label = IntervalLabel::two_component;
  std::int64_t delta = 0;
  Rational lower;
  bool lower_closed = true;
  std::optional<Rational> upper;
  bool upper_closed = false;
  /// False when the source result only applies from a larger degree on (O'Grady: delta >= 14).
  bool valid = true;
  /// The larger component is only known to hold semistable sheaves.
  bool stable_unknown = false;

  bool bounded() const { return upper.has_value(); }

  BigInt first_integer() const {
    BigInt f = ceil_of(lower);
    if (!lower_closed && Rational(f) == lower) ++f;
    return f;
  }

  /// Largest integer point; only meaningful for bounded intervals.
  BigInt last_integer() const {
    if (!upper) throw std::logic_error("ComponentInterval: unbounded above");
    BigInt l = floor_of(*upper);
    if (!upper_closed && Rational(l) == *upper) --l;
    return l;
  }

  bool is_empty() const { return bounded() && first_integer() > last_integer(); }

  BigInt integer_count() const {
    if (!upper) throw std::logic_error("ComponentInterval: unbounded above");
    return is_empty() ? BigInt(0) : last_integer() - first_integer() + 1;
  }

  bool contains(const BigInt& c2) const {
    const Rational q(c2);
    const bool above = lower_closed ? q >= lower : q > lower;
    if (!above) return false;
    if (!upper) return true;
    return upper_closed ? q <= *upper : q < *upper;
  }

  /// Integer points in increasing order; nullopt when unbounded or when the
  /// count exceeds cap.
  std::optional<std::vector<BigInt>> integer_points(
      std::size_t cap = kDefaultIntegerPointCap) const {
    if (!upper || integer_count() > cap) return std::nullopt;
    std::vector<BigInt> pts;
    if (is_empty()) return pts;
    for (BigInt v = first_integer(); v <= last_integer(); ++v) pts.push_back(v);
    return pts;
  }
};

namespace detail {

inline Rational cubic_over(const BigInt& a3, const BigInt& a2, const BigInt& a1,
                           const BigInt& a0, std::int64_t delta, const BigInt& den) {
  const BigInt d = delta;
  return Rational(((a3 * d + a2) * d + a1) * d + a0, den);
}

/// (delta^3 - 9 delta^2 + 26 delta - 3) / 3: where the O'Grady-type component
/// stops exceeding the expected dimension.
inline Rational ogrady_upper(std::int64_t delta) {
  return cubic_over(1, -9, 26, -3, delta, 3);
}

/// delta^3/4 - delta^2/2, reached by the construction for every degree.
inline Rational universal_good_bound(std::int64_t delta) {
  return cubic_over(1, -2, 0, 0, delta, 4);
}

/// Parity-sharpened lower bound: delta^2(delta-2)/4 or delta(delta-1)(delta-3)/4.
inline Rational good_bound(std::int64_t delta) {
  return delta % 2 == 0 ? cubic_over(1, -2, 0, 0, delta, 4)
                        : cubic_over(1, -4, 3, 0, delta, 4);
}

inline void check_delta(std::int64_t delta, const char* who) {
  if (delta < 4) {
    throw std::domain_error(std::string(who) + ": delta must be >= 4, got " +
                            std::to_string(delta));
  }
}

}  // namespace detail

/// [c2_min, inf): a good component exists for every c2 in it.
inline ComponentInterval good_tail_interval(std::int64_t delta) {
  detail::check_delta(delta, "good_tail_interval");
  ComponentInterval iv;
  iv.label = IntervalLabel::good_tail;
  iv.delta = delta;
  iv.lower = Rational(optimal_parameters(delta).c2_min);
  iv.lower_closed = true;
  return iv;
}

/// ((delta^3 - 7 delta)/6, ogrady_upper): a component of more than expected dimension.
inline ComponentInterval ogrady_interval(std::int64_t delta) {
  detail::check_delta(delta, "ogrady_interval");
  ComponentInterval iv;
  iv.label = IntervalLabel::ogrady;
  iv.delta = delta;
  iv.lower = detail::cubic_over(1, 0, -7, 0, delta, 6);
  iv.lower_closed = false;
  iv.upper = detail::ogrady_upper(delta);
  iv.upper_closed = false;
  iv.valid = delta >= 14;
  return iv;
}

/// [good_bound, ogrady_upper): a good component and a larger one coexist.
inline ComponentInterval two_component_interval(std::int64_t delta) {
  detail::check_delta(delta, "two_component_interval");
  ComponentInterval iv;
  iv.label = IntervalLabel::two_component;
  iv.delta = delta;
  iv.lower = detail::good_bound(delta);
  iv.upper = detail::ogrady_upper(delta);
  return iv;
}

/// Same as two_component_interval but with the parity-independent lower bound
/// delta^3/4 - delta^2/2.
inline ComponentInterval combined_two_component_interval(std::int64_t delta) {
  auto iv = two_component_interval(delta);
  iv.lower = detail::universal_good_bound(delta);
  return iv;
}

/// Torsion-free version using extensions of J_{P/X} by O_X (semistable sheaves).
inline ComponentInterval semistable_interval(std::int64_t delta) {
  detail::check_delta(delta, "semistable_interval");
  ComponentInterval iv;
  iv.label = IntervalLabel::semistable_two_component;
  iv.delta = delta;
  iv.lower = delta % 2 == 0 ? detail::cubic_over(1, -2, 0, 0, delta, 4)
                            : detail::cubic_over(1, -4, 3, 0, delta, 4);
  iv.upper = detail::cubic_over(1, -6, 11, -3, delta, 3);
  iv.stable_unknown = true;
  return iv;
}

/// c1 = 1 analogue: [delta(delta-1)^2/4 or delta(delta-2)^2/4, (2d^3 - 15d^2 + 37d - 6)/6).
inline ComponentInterval odd_c1_interval(std::int64_t delta) {
  detail::check_delta(delta, "odd_c1_interval");
  ComponentInterval iv;
  iv.label = IntervalLabel::odd_c1_two_component;
  iv.delta = delta;
  iv.lower = delta % 2 == 1 ? detail::cubic_over(1, -2, 1, 0, delta, 4)
                            : detail::cubic_over(1, -4, 4, 0, delta, 4);
  iv.upper = detail::cubic_over(2, -15, 37, -6, delta, 6);
  return iv;
}

inline ComponentInterval component_interval(IntervalLabel label, std::int64_t delta) {
  switch (label) {
    case IntervalLabel::good_tail: return good_tail_interval(delta);
    case IntervalLabel::ogrady: return ogrady_interval(delta);
    case IntervalLabel::two_component: return two_component_interval(delta);
    case IntervalLabel::semistable_two_component: return semistable_interval(delta);
    case IntervalLabel::odd_c1_two_component: return odd_c1_interval(delta);
  }
  throw std::invalid_argument("component_interval: unknown label");
}

// ---------------------------------------------------------------------------
// Degree thresholds.

using IntervalFamily = ComponentInterval (*)(std::int64_t);

inline IntervalFamily interval_family(IntervalLabel label) {
  switch (label) {
    case IntervalLabel::ogrady: return &ogrady_interval;
    case IntervalLabel::two_component: return &two_component_interval;
    case IntervalLabel::semistable_two_component: return &semistable_interval;
    case IntervalLabel::odd_c1_two_component: return &odd_c1_interval;
    case IntervalLabel::good_tail: break;
  }
  throw std::invalid_argument("interval_family: good_tail is never empty");
}

inline std::int64_t smallest_delta_of(Parity parity) { return parity == Parity::even ? 4 : 5; }

namespace detail {

inline Rational width(IntervalFamily family, std::int64_t delta) {
  const auto iv = family(delta);
  return *iv.upper - iv.lower;
}

/// On one parity class the width is a cubic in delta with positive leading
/// coefficient. Once the width exceeds 1 and its first two forward
/// differences (step 2) are positive, the width stays above 1 forever, so
/// every later interval holds an integer.
inline bool nonempty_from_here_on(IntervalFamily family, std::int64_t delta) {
  const Rational w0 = width(family, delta);
  const Rational w1 = width(family, delta + 2);
  const Rational w2 = width(family, delta + 4);
  const Rational w3 = width(family, delta + 6);
  const Rational d1 = w1 - w0;
  const Rational d2 = w2 - 2 * w1 + w0;
  const Rational d3 = w3 - 3 * w2 + 3 * w1 - w0;
  if (d3 <= 0) {
    throw std::logic_error("interval width is not an increasing cubic");
  }
  return w0 > 1 && d1 > 0 && d2 > 0;
}

}  // namespace detail

inline constexpr std::int64_t kThresholdSearchLimit = 1'000'000;

/// Smallest delta of the given parity whose interval contains an integer.
inline std::int64_t first_nonempty_delta(IntervalFamily family, Parity parity) {
  for (std::int64_t d = smallest_delta_of(parity); d < kThresholdSearchLimit; d += 2) {
    if (!family(d).is_empty()) return d;
  }
  throw std::logic_error("first_nonempty_delta: search limit reached");
}

/// Smallest delta0 of the given parity such that the interval contains an
/// integer for every delta >= delta0 of that parity.
inline std::int64_t min_delta_nonempty(IntervalFamily family, Parity parity) {
  std::int64_t threshold = smallest_delta_of(parity);
  for (std::int64_t d = threshold; d < kThresholdSearchLimit; d += 2) {
    if (family(d).is_empty()) threshold = d + 2;
    if (detail::nonempty_from_here_on(family, d)) return threshold;
  }
  throw std::logic_error("min_delta_nonempty: search limit reached");
}

inline std::int64_t min_delta_nonempty(IntervalLabel label, Parity parity) {
  return min_delta_nonempty(interval_family(label), parity);
}

/// Smallest delta0 >= 4 such that every delta >= delta0, of either parity, has
/// a nonempty interval.
inline std::int64_t min_delta_nonempty_any_parity(IntervalFamily family) {
  const std::int64_t even = min_delta_nonempty(family, Parity::even);
  const std::int64_t odd = min_delta_nonempty(family, Parity::odd);
  for (std::int64_t d = 4;; ++d) {
    const std::int64_t next_even = d % 2 == 0 ? d : d + 1;
    const std::int64_t next_odd = d % 2 == 1 ? d : d + 1;
    if (next_even >= even && next_odd >= odd) return d;
  }
}

}  // namespace modnum
