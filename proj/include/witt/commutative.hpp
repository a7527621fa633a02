#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/rational.hpp"
#include "witt/ring_context.hpp"
#include "witt/terms.hpp"

namespace witt {

/// Variable letters of the commutative rings: e-bar_i in S(W_{>=-1}), and
/// t-bar, d-bar (for the derivative), v-bar_j / E-bar_j in gr T_n / gr T_inf.
enum class Letter : std::uint8_t { e, t, d, v, E };

struct Variable {
  Letter letter;
  int index = 0;  // 0 for t and d

  static Variable e(int i) { return {Letter::e, i}; }
  static Variable t() { return {Letter::t, 0}; }
  static Variable d() { return {Letter::d, 0}; }
  static Variable v(int j) { return {Letter::v, j}; }
  static Variable E(int j) { return {Letter::E, j}; }

  /// Order-filtration weight: 0 for t, 1 otherwise.
  int order() const { return letter == Letter::t ? 0 : 1; }
  /// Degree-grading weight: t -> 1, d -> -1, indexed letters -> index.
  int degree() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Which commutative ring an element lives in.
class Alphabet {
 public:
  /// S(W_{>=-1}) = Q[e-bar_{-1}, e-bar_0, ...].
  static Alphabet symmetric() { return Alphabet(true, TargetRing::infinite()); }
  /// gr T_n = Q[t-bar, d-bar, v-bar_0..v-bar_{n-1}] or gr T_inf.
  static Alphabet graded(TargetRing ring) { return Alphabet(false, ring); }

  bool is_symmetric() const { return symmetric_; }
  const TargetRing& ring() const { return ring_; }

  bool admits(const Variable& x) const;
  /// Letter used for the ring's indexed variables (e, v or E).
  Letter indexed_letter() const;
  std::string name() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(bool symmetric, TargetRing ring) : symmetric_(symmetric), ring_(ring) {}
  bool symmetric_;
  TargetRing ring_;
};

class CommutativeMonomial {
 public:
  using Power = std::pair<Variable, int>;

  CommutativeMonomial() = default;
  /// Powers may be unsorted and repeated; zero exponents are dropped.
  explicit CommutativeMonomial(std::vector<Power> powers);

  const std::vector<Power>& powers() const { return powers_; }
  int exponent(const Variable& x) const;
  int order() const { return order_; }
  long degree() const { return degree_; }
  bool is_one() const { return powers_.empty(); }

  friend CommutativeMonomial operator*(const CommutativeMonomial& a,
                                       const CommutativeMonomial& b);
  friend bool operator==(const CommutativeMonomial& a,
                         const CommutativeMonomial& b) {
    return a.powers_ == b.powers_;
  }
  /// Canonical order: higher order first, then lower degree, then lex.
  friend bool operator<(const CommutativeMonomial& a,
                        const CommutativeMonomial& b);

 private:
  std::vector<Power> powers_;
  int order_ = 0;
  long degree_ = 0;
};

/// Sparse polynomial over Q in a declared alphabet.
class CommutativeElement {
 public:
  explicit CommutativeElement(Alphabet alphabet) : alphabet_(alphabet) {}

  static CommutativeElement constant(Alphabet alphabet, const Rational& c);
  /// Throws IndexError when the alphabet does not admit x.
  static CommutativeElement variable(Alphabet alphabet, Variable x);
  static CommutativeElement monomial(Alphabet alphabet, CommutativeMonomial m,
                                     const Rational& c = Rational(1));

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms<CommutativeMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const CommutativeMonomial& m) const {
    return terms_.coefficient(m);
  }

  /// Adds c*m after validating m against the alphabet.
  void add_term(const CommutativeMonomial& m, const Rational& c);

  CommutativeElement& operator+=(const CommutativeElement& other);
  CommutativeElement& operator-=(const CommutativeElement& other);
  CommutativeElement& operator*=(const Rational& c);

  friend CommutativeElement operator+(CommutativeElement a,
                                      const CommutativeElement& b) {
    return a += b;
  }
  friend CommutativeElement operator-(CommutativeElement a,
                                      const CommutativeElement& b) {
    return a -= b;
  }
  friend CommutativeElement operator-(CommutativeElement a) {
    return a *= Rational(-1);
  }
  friend CommutativeElement operator*(CommutativeElement a, const Rational& c) {
    return a *= c;
  }
  friend CommutativeElement operator*(const Rational& c, CommutativeElement a) {
    return a *= c;
  }
  /// Throws ContextError when alphabets differ.
  friend CommutativeElement operator*(const CommutativeElement& a,
                                      const CommutativeElement& b);
  friend bool operator==(const CommutativeElement& a,
                         const CommutativeElement& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  CommutativeElement pow(int k) const;

 private:
  Alphabet alphabet_;
  Terms<CommutativeMonomial> terms_;
};

/// Largest monomial order; throws ZeroElementError on zero.
int order(const CommutativeElement& x);
/// Common monomial degree, nullopt when inhomogeneous; throws on zero.
std::optional<long> degree(const CommutativeElement& x);

/// Ring homomorphism determined by the images of the variables.
CommutativeElement substitute(
    const CommutativeElement& x, Alphabet target,
    const std::function<CommutativeElement(const Variable&)>& image);

}  // namespace witt
