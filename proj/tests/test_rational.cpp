#include <doctest.h>

#include "witt/rational.hpp"

using namespace witt;

namespace {

// a (a-1) ... (a-b+1) / b! with plain long arithmetic.
long falling_over_factorial(long a, long b) {
  long num = 1, den = 1;
  for (long i = 0; i < b; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("binomial agrees with the falling-factorial definition") {
  for (long a = -6; a <= 10; ++a)
    for (long b = 0; b <= 6; ++b)
      CHECK(binomial(a, b) == falling_over_factorial(a, b));
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(4, -1), std::domain_error);
}

TEST_CASE("rationals stay in lowest terms") {
  Rational q(BigInt(6), BigInt(-4));
  CHECK(q.to_string() == "-3/2");
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK(Rational(BigInt(1), BigInt(2)) + Rational(BigInt(1), BigInt(3)) ==
        Rational(BigInt(5), BigInt(6)));
  CHECK(Rational(3) < Rational(BigInt(7), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("sign_power") {
  CHECK(sign_power(0) == 1);
  CHECK(sign_power(3) == -1);
  CHECK(sign_power(-1) == -1);
}
