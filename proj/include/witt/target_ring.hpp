#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "witt/commutative.hpp"
#include "witt/pbw.hpp"
#include "witt/rational.hpp"
#include "witt/ring_context.hpp"
#include "witt/terms.hpp"

namespace witt {

/// Normal-ordered monomial t^a d^b (v-word) of T_n or T_inf, where d stands
/// for the derivative and the v-word is an ascending word in v_j (T_n) or
/// e_j (T_inf).
class TargetMonomial {
 public:
  using Run = std::pair<int, int>;

  TargetMonomial() = default;
  TargetMonomial(int t_exp, int d_exp, std::vector<Run> runs = {});
  static TargetMonomial from_word(int t_exp, int d_exp,
                                  std::span<const int> word);

  int t_exp() const { return t_; }
  int d_exp() const { return d_; }
  const std::vector<Run>& runs() const { return runs_; }
  pbw::Word word() const;
  /// d_exp + word length.
  int order() const { return order_; }
  /// t_exp - d_exp + sum of letter indices.
  long degree() const { return degree_; }
  int max_index() const { return runs_.empty() ? -1 : runs_.back().first; }

  friend bool operator==(const TargetMonomial&, const TargetMonomial&) = default;
  /// Higher order first, then lower degree, then higher t power, higher d
  /// power, and finally the lexicographically smaller word.
  friend bool operator<(const TargetMonomial& a, const TargetMonomial& b);

 private:
  int t_ = 0;
  int d_ = 0;
  std::vector<Run> runs_;
  int order_ = 0;
  long degree_ = 0;
};

class TargetElement {
 public:
  explicit TargetElement(TargetRing ring) : ring_(ring) {}

  static TargetElement scalar(TargetRing ring, const Rational& c);
  static TargetElement t(TargetRing ring);
  static TargetElement d(TargetRing ring);
  /// v_j in T_n or e_j in T_inf; throws IndexError outside the ring.
  static TargetElement letter(TargetRing ring, int j);
  static TargetElement monomial(TargetRing ring, const TargetMonomial& m,
                                const Rational& c = Rational(1));

  const TargetRing& ring() const { return ring_; }
  const Terms<TargetMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const TargetMonomial& m) const {
    return terms_.coefficient(m);
  }

  /// Throws IndexError when m uses a letter outside the ring.
  void add_term(const TargetMonomial& m, const Rational& c);

  TargetElement& operator+=(const TargetElement& other);
  TargetElement& operator-=(const TargetElement& other);
  TargetElement& operator*=(const Rational& c);

  friend TargetElement operator+(TargetElement a, const TargetElement& b) {
    return a += b;
  }
  friend TargetElement operator-(TargetElement a, const TargetElement& b) {
    return a -= b;
  }
  friend TargetElement operator-(TargetElement a) { return a *= Rational(-1); }
  friend TargetElement operator*(TargetElement a, const Rational& c) {
    return a *= c;
  }
  friend TargetElement operator*(const Rational& c, TargetElement a) {
    return a *= c;
  }
  /// Throws ContextError when the rings differ.
  friend TargetElement operator*(const TargetElement& a, const TargetElement& b);
  friend bool operator==(const TargetElement& a, const TargetElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  TargetRing ring_;
  Terms<TargetMonomial> terms_;
};

/// Normal-ordered product: d t -> t d + 1, letters commute with t and d,
/// v_j v_i -> v_i v_j + (i - j) v_{i+j} (v_{i+j} = 0 in T_n once i + j >= n).
TargetElement t_multiply(const TargetElement& a, const TargetElement& b);
TargetElement t_commutator(const TargetElement& a, const TargetElement& b);

/// nullopt when inhomogeneous; throws ZeroElementError on zero.
std::optional<long> t_degree(const TargetElement& a);
/// Throws ZeroElementError on zero.
int t_order(const TargetElement& a);

/// Top-order part as a polynomial in gr T_n / gr T_inf.
CommutativeElement t_gr(const TargetElement& a);

/// T_n -> T_m (m <= n) or T_inf -> T_m: kills every letter of index >= m.
/// Throws DomainError when m > n.
TargetElement quotient(const TargetElement& a, int m);
/// The associated graded quotient gr T_n -> gr T_m.
CommutativeElement quotient(const CommutativeElement& x, int m);

/// Membership in L = {x in T_inf : [d, x] = 0}, i.e. no t letters.
bool in_L(const TargetElement& a);
/// Projection onto the t-free part: sum_k t^k r_k -> r_0.
TargetElement pi_projection(const TargetElement& a);

/// Q-algebra map gr T_n -> Q[t-bar, d-bar] with
/// v-bar_j -> (-1)^{j+1} t-bar^{j+1} d-bar. The result lives in gr T_0.
CommutativeElement phi_map(const CommutativeElement& x);

/// c-bar_i = t-bar^{i+1} d-bar + sum_j C(i+1, j+1) t-bar^{i-j} v-bar_j,
/// the image of e-bar_i under the associated graded orbit map.
CommutativeElement c_bar(int i, TargetRing ring);

}  // namespace witt
