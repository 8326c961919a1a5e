#include "modnum/p3cohom.hpp"

#include "brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace modnum;

TEST_CASE("h_line examples", "[p3cohom]") {
  CHECK(h_line(0, 2) == 10);
  CHECK(h_line(3, -4) == 1);
  CHECK(h_line(0, -1) == 0);
  CHECK(h_line(3, -5) == 4);
  for (std::int64_t n = -10; n <= 10; ++n) {
    CHECK(h_line(1, n) == 0);
    CHECK(h_line(2, n) == 0);
  }
}

TEST_CASE("h_line rejects bad indices", "[p3cohom]") {
  CHECK_THROWS_AS(h_line(4, 0), std::out_of_range);
  CHECK_THROWS_AS(h_line(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(h_free_sum(7, FreeSheafSum{}, 0), std::out_of_range);
}

TEST_CASE("h0 counts monomials", "[p3cohom]") {
  for (std::int64_t n = -5; n <= 20; ++n) {
    CHECK(h_line(0, n) == brute::count_monomials(n));
  }
}

TEST_CASE("free sums", "[p3cohom]") {
  CHECK(h_free_sum(0, {{-2, 3}}, 2) == 3);
  CHECK(chi_free_sum({{-4, 1}}, 0) == brute::falling_binomial(-1, 3));
  CHECK(chi_free_sum({{-4, 1}}, 0) == -1);
  const std::int64_t s = 3;
  CHECK(h_free_sum(3, {{-s - 1, s}}, s - 3) == 3);

  FreeSheafSum sum{{-1, 2}, {3, 1}};
  CHECK(sum.rank() == 3);
  CHECK(h_free_sum(0, sum, 0) == 20);  // O(3) has 20 sections, O(-1) none
  CHECK(FreeSheafSum{}.rank() == 0);
  CHECK(h_free_sum(0, FreeSheafSum{}, 5) == 0);
  CHECK_THROWS_AS(FreeSheafSum().add(0, 0), std::invalid_argument);
}

TEST_CASE("Serre duality and Euler characteristic on P3", "[p3cohom][property]") {
  for (std::int64_t n = -30; n <= 30; ++n) {
    for (int i = 0; i <= 3; ++i) {
      CHECK(h_line(i, n) == h_line(3 - i, -n - 4));
    }
    const BigInt alternating = h_line(0, n) - h_line(1, n) + h_line(2, n) - h_line(3, n);
    CHECK(alternating == binom_poly(n + 3, 3));
    CHECK(chi_line(n) == brute::chi_p3(n));
    CHECK(h_line(0, n + 1) >= h_line(0, n));
  }
}

TEST_CASE("chi of a free sum equals the alternating sum of its h's", "[p3cohom][property]") {
  const FreeSheafSum sum{{-5, 4}, {-3, 5}, {2, 1}};
  for (std::int64_t n = -12; n <= 12; ++n) {
    BigInt alt = 0;
    for (int i = 0; i <= 3; ++i) alt += (i % 2 == 0 ? 1 : -1) * h_free_sum(i, sum, n);
    CHECK(alt == chi_free_sum(sum, n));
  }
}
