#include "modnum/arith.hpp"

#include "brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace modnum;

TEST_CASE("binom_trunc examples", "[arith]") {
  CHECK(binom_trunc(7, 3) == 35);
  CHECK(binom_trunc(-1, 3) == 0);
  CHECK(binom_trunc(2, 3) == 0);
  CHECK(binom_trunc(5, 0) == 1);
  CHECK(binom_trunc(-3, 0) == 0);
  // h^0(O_{P^3}(10)) against counted monomials.
  CHECK(brute::count_monomials(10) == 286);
  CHECK(binom_trunc(13, 3) == brute::count_monomials(10));
}

TEST_CASE("binom_poly examples", "[arith]") {
  CHECK(binom_poly(7, 3) == 35);
  CHECK(binom_poly(-1, 3) == -1);
  CHECK(binom_poly(0, 3) == 0);
  CHECK(binom_poly(-4, 0) == 1);
}

TEST_CASE("binomials reject negative k", "[arith]") {
  CHECK_THROWS_AS(binom_trunc(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(binom_poly(3, -1), std::invalid_argument);
}

TEST_CASE("binomials match Pascal's triangle", "[arith][property]") {
  const auto t = brute::pascal(60);
  for (int m = 0; m <= 60; ++m) {
    for (int k = 0; k <= 8; ++k) {
      const std::int64_t expected = k <= m ? t[m][k] : 0;
      CHECK(binom_trunc(m, k) == expected);
      CHECK(binom_poly(m, k) == expected);
    }
  }
}

TEST_CASE("binom_poly reflection identity", "[arith][property]") {
  for (std::int64_t m = -40; m <= 40; ++m) {
    for (int k = 0; k <= 6; ++k) {
      const BigInt sign = k % 2 == 0 ? 1 : -1;
      CHECK(binom_poly(m, k) == sign * binom_poly(k - 1 - m, k));
      CHECK(binom_poly(m, k) == brute::falling_binomial(m, k));
    }
  }
}

TEST_CASE("binomials at large arguments stay exact", "[arith]") {
  // C(10^6 + 3, 3) exceeds 2^53 but not 2^63; compare with 128-bit product.
  const std::int64_t m = 1'000'003;
  const __int128 expected = static_cast<__int128>(m) * (m - 1) * (m - 2) / 6;
  CHECK(binom_trunc(m, 3) == BigInt(static_cast<std::int64_t>(expected)));
  // And something that does not fit in 64 bits at all.
  BigInt big = binom_poly(std::int64_t{1} << 40, 3);
  CHECK(big > BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("rational arithmetic is reduced and exact", "[arith][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = dist(rng);
    std::int64_t b = dist(rng);
    if (a == 0 || b == 0) continue;
    const Rational q = make_rational(a, b);
    CHECK(q * make_rational(b, a) == 1);
    CHECK(boost::multiprecision::denominator(q) > 0);
    CHECK(gcd(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q)) == 1);
    // Reduction is idempotent.
    CHECK(make_rational(boost::multiprecision::numerator(q),
                        boost::multiprecision::denominator(q)) == q);
  }
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("floor and ceil of rationals", "[arith]") {
  CHECK(floor_of(make_rational(7, 2)) == 3);
  CHECK(ceil_of(make_rational(7, 2)) == 4);
  CHECK(floor_of(make_rational(-7, 2)) == -4);
  CHECK(ceil_of(make_rational(-7, 2)) == -3);
  CHECK(floor_of(make_rational(-6, 2)) == -3);
  CHECK(ceil_of(make_rational(6, 3)) == 2);
  CHECK(to_string(make_rational(1065, 12)) == "355/4");
  CHECK(to_string(make_rational(-8, 4)) == "-2");
  CHECK(to_string(make_rational(3, -5)) == "-3/5");
  CHECK(make_rational(-3, -5) == make_rational(3, 5));
  CHECK(is_integral(make_rational(10, 5)));
}

TEST_CASE("to_int64 guards the range", "[arith]") {
  CHECK(to_int64(BigInt(-5)) == -5);
  BigInt huge = BigInt(1) << 70;
  CHECK_THROWS_AS(to_int64(huge), std::overflow_error);
}
