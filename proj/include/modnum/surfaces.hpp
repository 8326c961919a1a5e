#pragma once

// Numerics of a polarized surface X with Pic generated by O_X(1) and
// K_X = O_X(k): Riemann-Roch for O_X(n) and for rank-2 bundles with c1 = 0.

#include "modnum/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace modnum {

struct SurfaceNumerics {
  std::int64_t h_square = 1;  // H^2
  std::int64_t k = 0;         // K_X = O_X(k)
  BigInt chi0 = 1;            // chi(O_X)
  /// Degree of the hypersurface when built by hypersurface(); 0 otherwise.
  std::int64_t delta = 0;

  bool is_hypersurface() const { return delta != 0; }

  friend bool operator==(const SurfaceNumerics&, const SurfaceNumerics&) = default;
};

inline SurfaceNumerics make_surface(std::int64_t h_square, std::int64_t k, BigInt chi0) {
  if (h_square < 1) {
    throw std::invalid_argument("surface: H^2 must be >= 1, got " + std::to_string(h_square));
  }
  return SurfaceNumerics{h_square, k, std::move(chi0), 0};
}

/// Smooth degree-delta surface in P^3. chi(O_X) comes from
/// 0 -> O(-delta) -> O -> O_X -> 0.
inline SurfaceNumerics hypersurface(std::int64_t delta) {
  if (delta < 4) {
    throw std::domain_error("hypersurface: degree must be >= 4, got " + std::to_string(delta));
  }
  return SurfaceNumerics{delta, delta - 4, 1 + binom_poly(delta - 1, 3), delta};
}

/// chi(O_X(n)) = chi(O_X) + H^2 n (n - k) / 2.
inline BigInt chi_OX(const SurfaceNumerics& x, std::int64_t n) {
  // n(n-k) is even whenever H^2 is odd (adjunction), so the division is exact
  // for genuine surfaces; reject data that breaks it.
  BigInt twice = BigInt(x.h_square) * n * (n - x.k);
  if (twice % 2 != 0) {
    throw std::domain_error("chi_OX: H^2 n(n-k) is odd; inconsistent surface data");
  }
  return x.chi0 + twice / 2;
}

/// Restriction-sequence form for hypersurfaces: chi(O_P3(n)) - chi(O_P3(n - delta)).
inline BigInt chi_OX_restriction(std::int64_t delta, std::int64_t n) {
  return binom_poly(n + 3, 3) - binom_poly(n - delta + 3, 3);
}

/// Expected dimension 4 c2 - 3 chi(O_X) of the moduli space at a c1 = 0 bundle.
inline BigInt expected_dim(const SurfaceNumerics& x, const BigInt& c2) {
  return 4 * c2 - 3 * x.chi0;
}

/// chi(E(n)) for a rank-2 bundle with c1 = 0.
inline BigInt chi_E(const SurfaceNumerics& x, const BigInt& c2, std::int64_t n) {
  return 2 * chi_OX(x, n) - c2;
}

}  // namespace modnum
