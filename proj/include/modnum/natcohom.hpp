#pragma once

// Natural cohomology of rank-2, c1 = 0 bundles: for each twist n at most one
// of h^0, h^1, h^2 of E(n) is nonzero, so the whole table follows from
// chi(E(n)) = 2 chi(O_X(n)) - c2. With K_X = O_X(k), Serre duality gives
// h^i(E(n)) = h^(2-i)(E(k-n)), so only n >= k/2 needs computing.
//
// The general bundle of the constructed component has natural cohomology
// once c2 > gamma = 2 chi(O_X(beta)), where beta >= k/2 is a twist from which
// the starting bundle already has it.

#include "modnum/arith.hpp"
#include "modnum/surfaces.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modnum {

/// Smallest integer strictly greater than 3 delta / 2 - 4.
inline std::int64_t beta_for_hypersurface(std::int64_t delta) {
  if (delta < 4) {
    throw std::domain_error("beta_for_hypersurface: delta must be >= 4, got " +
                            std::to_string(delta));
  }
  const std::int64_t beta = to_int64(floor_of(Rational(3 * delta - 8, 2))) + 1;
  const std::int64_t closed = delta % 2 == 0 ? 3 * delta / 2 - 3 : (3 * delta - 7) / 2;
  if (beta != closed || 2 * beta < delta - 4) {
    throw std::logic_error("beta_for_hypersurface: inconsistent at delta=" +
                           std::to_string(delta));
  }
  return beta;
}

inline BigInt gamma(const SurfaceNumerics& x, std::int64_t beta) {
  if (2 * beta < x.k) {
    throw std::domain_error("gamma: beta must be >= k/2 (beta=" + std::to_string(beta) +
                            ", k=" + std::to_string(x.k) + ")");
  }
  return 2 * chi_OX(x, beta);
}

/// Bound on c2 above which the general bundle of the constructed component
/// has natural cohomology: (13 delta^3 - 24 delta^2 + 8 delta) / 12.
inline Rational thm_a1_threshold(std::int64_t delta) {
  const BigInt d = delta;
  Rational threshold(13 * d * d * d - 24 * d * d + 8 * d, 12);
  if (delta >= 4) {
    const auto x = hypersurface(delta);
    if (delta % 2 == 0 && threshold != Rational(2 * chi_OX(x, 3 * delta / 2 - 3))) {
      throw std::logic_error("thm_a1_threshold: disagrees with 2 chi(O_X(3d/2 - 3))");
    }
    if (Rational(gamma(x, beta_for_hypersurface(delta))) > threshold) {
      throw std::logic_error("thm_a1_threshold: gamma exceeds threshold");
    }
  }
  return threshold;
}

struct ProfileRow {
  std::int64_t n = 0;
  BigInt h0;
  BigInt h1;
  BigInt h2;
  BigInt chi;

  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

struct NaturalCohomologyProfile {
  SurfaceNumerics surface;
  BigInt c2;
  std::int64_t beta = 0;
  BigInt gamma;
  std::vector<ProfileRow> rows;
};

namespace detail {

inline ProfileRow natural_row_upper_half(const SurfaceNumerics& x, const BigInt& c2,
                                         std::int64_t n) {
  ProfileRow r;
  r.n = n;
  r.chi = chi_E(x, c2, n);
  r.h0 = r.chi > 0 ? r.chi : BigInt(0);
  r.h1 = r.chi < 0 ? BigInt(-r.chi) : BigInt(0);
  r.h2 = 0;
  return r;
}

}  // namespace detail

/// Predicted (h0, h1, h2) of E(n) for n in [n_min, n_max]. For hypersurfaces
/// beta defaults to beta_for_hypersurface; other surfaces must supply it.
/// Throws std::domain_error when c2 <= gamma.
inline NaturalCohomologyProfile hilbert_profile(const SurfaceNumerics& x, const BigInt& c2,
                                                std::int64_t n_min, std::int64_t n_max,
                                                std::optional<std::int64_t> beta = {}) {
  if (n_min > n_max) {
    throw std::invalid_argument("hilbert_profile: n_min > n_max");
  }
  if (!beta) {
    if (!x.is_hypersurface()) {
      throw std::invalid_argument("hilbert_profile: beta is required for a general surface");
    }
    beta = beta_for_hypersurface(x.delta);
  }

  NaturalCohomologyProfile profile;
  profile.surface = x;
  profile.c2 = c2;
  profile.beta = *beta;
  profile.gamma = gamma(x, *beta);
  if (c2 <= profile.gamma) {
    throw std::domain_error("hilbert_profile: natural cohomology only guaranteed for c2 > " +
                            profile.gamma.str() + " (got c2=" + c2.str() + ")");
  }

  if (x.k % 2 == 0 && chi_E(x, c2, x.k / 2) > 0) {
    throw std::logic_error("hilbert_profile: chi(E(k/2)) > 0 rules out natural cohomology");
  }

  profile.rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    if (2 * n >= x.k) {
      profile.rows.push_back(detail::natural_row_upper_half(x, c2, n));
    } else {
      // Serre dual of the row at k - n, which lies in the upper half.
      const auto dual = detail::natural_row_upper_half(x, c2, x.k - n);
      ProfileRow r{n, dual.h2, dual.h1, dual.h0, chi_E(x, c2, n)};
      if (r.h0 - r.h1 + r.h2 != r.chi) {
        throw std::logic_error("hilbert_profile: duality row breaks chi at n=" +
                               std::to_string(n));
      }
      profile.rows.push_back(std::move(r));
    }
  }
  return profile;
}

}  // namespace modnum
