#pragma once

// Exact integer and rational arithmetic plus the two binomial conventions.
//
// binom_trunc is the dimension count: it is zero whenever m < k, so
// h^0(O_{P^3}(n)) = binom_trunc(n + 3, 3) is correct for every n.
// binom_poly is the polynomial m(m-1)...(m-k+1)/k! evaluated at any integer,
// which is what Euler characteristics need. The two agree for m >= 0 and
// must not be mixed up.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace modnum {

// Expression templates off: values behave like plain value types with auto and ?:.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt binom_trunc(std::int64_t m, int k) {
  if (k < 0) {
    throw std::invalid_argument("binom_trunc: k must be non-negative");
  }
  if (m < k) {
    return 0;
  }
  // Multiplicative formula; every prefix product is itself a binomial.
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

inline BigInt binom_poly(std::int64_t m, int k) {
  if (k < 0) {
    throw std::invalid_argument("binom_poly: k must be non-negative");
  }
  BigInt numerator = 1;
  BigInt factorial = 1;
  for (int i = 0; i < k; ++i) {
    numerator *= BigInt(m) - i;
    factorial *= i + 1;
  }
  return numerator / factorial;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  // rational_adaptor rejects negative denominators.
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

inline BigInt floor_of(const Rational& q) {
  const BigInt& n = boost::multiprecision::numerator(q);
  const BigInt& d = boost::multiprecision::denominator(q);
  BigInt quot = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) {
    --quot;
  }
  return quot;
}

inline BigInt ceil_of(const Rational& q) {
  return -floor_of(-q);
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("to_int64: value out of range: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace modnum
