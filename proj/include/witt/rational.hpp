#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace witt {

using BigInt = mpz_class;

/// Exact element of the base field Q, always kept in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(const BigInt& value) : value_(value) {}
  /// Throws std::domain_error when den is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with an optional leading minus sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws std::domain_error on zero.
  Rational inverse() const;

  /// "p/q", or "p" when q = 1; the sign sits on the numerator.
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Generalized binomial coefficient a(a-1)...(a-b+1)/b! for any integer a
/// and b >= 0. Throws std::domain_error for b < 0.
BigInt binomial(long a, long b);

/// (-1)^k as a small integer.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace witt
