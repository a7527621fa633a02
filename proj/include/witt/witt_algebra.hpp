#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "witt/commutative.hpp"
#include "witt/pbw.hpp"
#include "witt/rational.hpp"
#include "witt/terms.hpp"

namespace witt {

/// PBW monomial e_{i_1} ... e_{i_m} of U(W_{>=-1}) with i_1 <= ... <= i_m,
/// stored as runs (index, multiplicity) with strictly increasing indices.
class WittMonomial {
 public:
  using Run = std::pair<int, int>;

  /// The empty word.
  WittMonomial() = default;
  /// Throws IndexError / DomainError on malformed runs.
  explicit WittMonomial(std::vector<Run> runs);
  /// Word must be non-decreasing with all indices >= -1.
  static WittMonomial from_word(std::span<const int> word);

  const std::vector<Run>& runs() const { return runs_; }
  pbw::Word word() const;
  int order() const { return order_; }
  long degree() const { return degree_; }
  bool is_one() const { return runs_.empty(); }

  friend bool operator==(const WittMonomial& a, const WittMonomial& b) {
    return a.runs_ == b.runs_;
  }
  /// Canonical order: higher order first, then lower degree, then the
  /// lexicographically smaller word.
  friend bool operator<(const WittMonomial& a, const WittMonomial& b);

 private:
  std::vector<Run> runs_;
  int order_ = 0;
  long degree_ = 0;
};

/// Element of U(W_{>=-1}) in PBW normal form.
class WittElement {
 public:
  WittElement() = default;

  static WittElement scalar(const Rational& c);
  /// e_i; throws IndexError for i < -1.
  static WittElement generator(int i);
  static WittElement monomial(const WittMonomial& m,
                              const Rational& c = Rational(1));
  /// Normal-orders an arbitrary (unsorted) word.
  static WittElement from_word(const pbw::Word& word,
                               const Rational& c = Rational(1));

  const Terms<WittMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const WittMonomial& m) const {
    return terms_.coefficient(m);
  }

  WittElement& operator+=(const WittElement& other) {
    terms_.add(other.terms_);
    return *this;
  }
  WittElement& operator-=(const WittElement& other) {
    terms_.add(other.terms_, Rational(-1));
    return *this;
  }
  WittElement& operator*=(const Rational& c) {
    terms_ = terms_.scaled(c);
    return *this;
  }

  friend WittElement operator+(WittElement a, const WittElement& b) {
    return a += b;
  }
  friend WittElement operator-(WittElement a, const WittElement& b) {
    return a -= b;
  }
  friend WittElement operator-(WittElement a) { return a *= Rational(-1); }
  friend WittElement operator*(WittElement a, const Rational& c) {
    return a *= c;
  }
  friend WittElement operator*(const Rational& c, WittElement a) {
    return a *= c;
  }
  friend WittElement operator*(const WittElement& a, const WittElement& b);
  friend bool operator==(const WittElement& a, const WittElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms<WittMonomial> terms_;
};

/// [e_i, e_j] = (j - i) e_{i+j}; throws IndexError when i or j < -1.
WittElement bracket(int i, int j);

WittElement multiply(const WittElement& a, const WittElement& b);
/// ab - ba.
WittElement commutator(const WittElement& a, const WittElement& b);

/// Longest PBW word; throws ZeroElementError on zero.
int order(const WittElement& a);
/// Common degree of all monomials, nullopt if inhomogeneous; throws on zero.
std::optional<long> degree(const WittElement& a);

/// Image in S(W_{>=-1}) of the top-order part; throws on zero.
CommutativeElement gr(const WittElement& a);

/// Symmetrizer S(W_{>=-1}) -> U(W_{>=-1}): each monomial of order m goes to
/// the average of its m! orderings.
WittElement sym(const CommutativeElement& x);

/// Polynomial in t: exponent -> coefficient, no zero coefficients.
using DensityPolynomial = std::map<int, Rational>;

/// e_index . t^b = (b + lambda (index + 1)) t^{index + b} on the tensor
/// density module F_lambda = Q[t].
DensityPolynomial density_action(const Rational& lambda, int index,
                                 const DensityPolynomial& g);
/// Action of a whole element; a word e_{i_1} ... e_{i_m} acts right to left.
DensityPolynomial density_action(const Rational& lambda, const WittElement& x,
                                 const DensityPolynomial& g);

}  // namespace witt
