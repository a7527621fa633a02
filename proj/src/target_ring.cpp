#include "witt/target_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "witt/errors.hpp"

namespace witt {

namespace {

std::vector<TargetMonomial::Run> runs_of(std::span<const int> word) {
  std::vector<TargetMonomial::Run> runs;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && word[k] < word[k - 1])
      throw DomainError("target letter word must be non-decreasing");
    if (!runs.empty() && runs.back().first == word[k])
      ++runs.back().second;
    else
      runs.emplace_back(word[k], 1);
  }
  return runs;
}

// (c)_k = c (c - 1) ... (c - k + 1)
BigInt falling(long c, long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= (c - i);
  return r;
}

Variable graded_letter(const TargetRing& ring, int j) {
  return ring.is_infinite() ? Variable::E(j) : Variable::v(j);
}

}  // namespace

TargetMonomial::TargetMonomial(int t_exp, int d_exp, std::vector<Run> runs)
    : t_(t_exp), d_(d_exp), runs_(std::move(runs)) {
  if (t_ < 0 || d_ < 0) throw DomainError("negative t or d exponent");
  order_ = d_;
  degree_ = t_ - d_;
  for (std::size_t k = 0; k < runs_.size(); ++k) {
    auto [j, mult] = runs_[k];
    if (j < 0) throw IndexError("target letters need index >= 0");
    if (mult < 1) throw DomainError("letter multiplicity must be positive");
    if (k > 0 && runs_[k - 1].first >= j)
      throw DomainError("letter runs must be strictly increasing");
    order_ += mult;
    degree_ += static_cast<long>(j) * mult;
  }
}

TargetMonomial TargetMonomial::from_word(int t_exp, int d_exp,
                                         std::span<const int> word) {
  return TargetMonomial(t_exp, d_exp, runs_of(word));
}

pbw::Word TargetMonomial::word() const {
  pbw::Word w;
  for (auto [j, mult] : runs_) w.insert(w.end(), static_cast<std::size_t>(mult), j);
  return w;
}

bool operator<(const TargetMonomial& a, const TargetMonomial& b) {
  if (a.order_ != b.order_) return a.order_ > b.order_;
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  if (a.t_ != b.t_) return a.t_ > b.t_;
  if (a.d_ != b.d_) return a.d_ > b.d_;
  return a.word() < b.word();
}

TargetElement TargetElement::scalar(TargetRing ring, const Rational& c) {
  TargetElement x(ring);
  x.terms_.add(TargetMonomial(), c);
  return x;
}

TargetElement TargetElement::t(TargetRing ring) {
  return monomial(ring, TargetMonomial(1, 0));
}

TargetElement TargetElement::d(TargetRing ring) {
  return monomial(ring, TargetMonomial(0, 1));
}

TargetElement TargetElement::letter(TargetRing ring, int j) {
  return monomial(ring, TargetMonomial(0, 0, {{j, 1}}));
}

TargetElement TargetElement::monomial(TargetRing ring, const TargetMonomial& m,
                                      const Rational& c) {
  TargetElement x(ring);
  x.add_term(m, c);
  return x;
}

void TargetElement::add_term(const TargetMonomial& m, const Rational& c) {
  if (m.max_index() >= 0 && !ring_.has_letter(m.max_index()))
    throw IndexError("letter of index " + std::to_string(m.max_index()) +
                     " is not in " + ring_.name());
  terms_.add(m, c);
}

TargetElement& TargetElement::operator+=(const TargetElement& other) {
  if (!(ring_ == other.ring_))
    throw ContextError("adding elements of " + ring_.name() + " and " +
                       other.ring_.name());
  terms_.add(other.terms_);
  return *this;
}

TargetElement& TargetElement::operator-=(const TargetElement& other) {
  if (!(ring_ == other.ring_))
    throw ContextError("subtracting elements of " + ring_.name() + " and " +
                       other.ring_.name());
  terms_.add(other.terms_, Rational(-1));
  return *this;
}

TargetElement& TargetElement::operator*=(const Rational& c) {
  terms_ = terms_.scaled(c);
  return *this;
}

TargetElement operator*(const TargetElement& a, const TargetElement& b) {
  if (!(a.ring_ == b.ring_))
    throw ContextError("multiplying elements of " + a.ring_.name() + " and " +
                       b.ring_.name());
  TargetElement out(a.ring_);
  auto& engine = pbw::thread_orderer(a.ring_.cap());
  for (const auto& [ma, ca] : a.terms_) {
    pbw::Word wa = ma.word();
    for (const auto& [mb, cb] : b.terms_) {
      pbw::Word w = wa;
      pbw::Word wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      Terms<pbw::Word> letters = engine.normal_form(w);
      if (letters.empty()) continue;
      Rational c = ca * cb;
      // d^b t^c = sum_k C(b, k) (c)_k t^{c-k} d^{b-k}
      int b1 = ma.d_exp(), c2 = mb.t_exp();
      for (int k = 0; k <= std::min(b1, c2); ++k) {
        Rational leibniz(binomial(b1, k) * falling(c2, k));
        int t_exp = ma.t_exp() + c2 - k;
        int d_exp = b1 - k + mb.d_exp();
        for (const auto& [lw, lc] : letters)
          out.terms_.add(TargetMonomial::from_word(t_exp, d_exp, lw),
                         c * leibniz * lc);
      }
    }
  }
  return out;
}

TargetElement t_multiply(const TargetElement& a, const TargetElement& b) {
  return a * b;
}

TargetElement t_commutator(const TargetElement& a, const TargetElement& b) {
  return a * b - b * a;
}

std::optional<long> t_degree(const TargetElement& a) {
  if (a.is_zero()) throw ZeroElementError("degree of zero element");
  std::optional<long> d;
  for (const auto& [m, c] : a.terms()) {
    if (d && *d != m.degree()) return std::nullopt;
    d = m.degree();
  }
  return d;
}

int t_order(const TargetElement& a) {
  if (a.is_zero()) throw ZeroElementError("order of zero element");
  return a.terms().begin()->first.order();
}

CommutativeElement t_gr(const TargetElement& a) {
  int top = t_order(a);
  Alphabet alphabet = Alphabet::graded(a.ring());
  CommutativeElement out(alphabet);
  for (const auto& [m, c] : a.terms()) {
    if (m.order() != top) continue;
    std::vector<CommutativeMonomial::Power> powers;
    powers.emplace_back(Variable::t(), m.t_exp());
    powers.emplace_back(Variable::d(), m.d_exp());
    for (auto [j, mult] : m.runs())
      powers.emplace_back(graded_letter(a.ring(), j), mult);
    out.add_term(CommutativeMonomial(std::move(powers)), c);
  }
  return out;
}

TargetElement quotient(const TargetElement& a, int m) {
  if (m < 0) throw DomainError("quotient target must be T_m with m >= 0");
  if (!a.ring().is_infinite() && m > a.ring().n())
    throw DomainError("cannot map " + a.ring().name() + " onto T_" +
                      std::to_string(m));
  TargetElement out(TargetRing::finite(m));
  for (const auto& [mono, c] : a.terms())
    if (mono.max_index() < m) out.add_term(mono, c);
  return out;
}

CommutativeElement quotient(const CommutativeElement& x, int m) {
  const Alphabet& source = x.alphabet();
  if (source.is_symmetric())
    throw ContextError("graded quotient expects an element of gr T_n");
  if (m < 0) throw DomainError("quotient target must be gr T_m with m >= 0");
  if (!source.ring().is_infinite() && m > source.ring().n())
    throw DomainError("cannot map " + source.name() + " onto gr T_" +
                      std::to_string(m));
  Alphabet target = Alphabet::graded(TargetRing::finite(m));
  CommutativeElement out(target);
  for (const auto& [mono, c] : x.terms()) {
    std::vector<CommutativeMonomial::Power> powers;
    bool killed = false;
    for (const auto& [v, k] : mono.powers()) {
      if (v.letter == Letter::v || v.letter == Letter::E) {
        if (v.index >= m) {
          killed = true;
          break;
        }
        powers.emplace_back(Variable::v(v.index), k);
      } else {
        powers.emplace_back(v, k);
      }
    }
    if (!killed) out.add_term(CommutativeMonomial(std::move(powers)), c);
  }
  return out;
}

bool in_L(const TargetElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& term) { return term.first.t_exp() == 0; });
}

TargetElement pi_projection(const TargetElement& a) {
  TargetElement out(a.ring());
  for (const auto& [m, c] : a.terms())
    if (m.t_exp() == 0) out.add_term(m, c);
  return out;
}

CommutativeElement phi_map(const CommutativeElement& x) {
  if (x.alphabet().is_symmetric())
    throw ContextError("phi expects an element of gr T_n");
  Alphabet target = Alphabet::graded(TargetRing::finite(0));
  return substitute(x, target, [&](const Variable& v) {
    if (v.letter == Letter::t || v.letter == Letter::d)
      return CommutativeElement::variable(target, v);
    CommutativeMonomial m({{Variable::t(), v.index + 1}, {Variable::d(), 1}});
    return CommutativeElement::monomial(target, m,
                                        Rational(sign_power(v.index + 1)));
  });
}

CommutativeElement c_bar(int i, TargetRing ring) {
  if (i < -1) throw IndexError("c-bar_i needs i >= -1");
  Alphabet alphabet = Alphabet::graded(ring);
  CommutativeElement out(alphabet);
  out.add_term(CommutativeMonomial({{Variable::t(), i + 1}, {Variable::d(), 1}}),
               Rational(1));
  int top = ring.is_infinite() ? i : ring.n() - 1;
  for (int j = 0; j <= top; ++j) {
    BigInt coeff = binomial(i + 1, j + 1);
    // Negative t powers only occur for j > i, where the binomial vanishes.
    if (j > i && coeff != 0)
      throw std::logic_error("c-bar expansion produced a negative t power");
    if (coeff == 0) continue;
    out.add_term(CommutativeMonomial({{Variable::t(), i - j},
                                      {graded_letter(ring, j), 1}}),
                 Rational(coeff));
  }
  return out;
}

}  // namespace witt
