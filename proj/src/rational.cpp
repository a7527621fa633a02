#include "witt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace witt {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

BigInt binomial(long a, long b) {
  if (b < 0) throw std::domain_error("binomial with negative lower index");
  // mpz_bin_ui covers negative upper indices via (-1)^b C(b-a-1, b).
  BigInt top(a);
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(),
             static_cast<unsigned long>(b));
  return result;
}

}  // namespace witt
