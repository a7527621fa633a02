#include "witt/commutative.hpp"

#include <algorithm>
#include <map>

#include "witt/errors.hpp"

namespace witt {

TargetRing TargetRing::finite(int n) {
  if (n < 0) throw DomainError("T_n needs n >= 0");
  return TargetRing(false, n);
}

std::string TargetRing::name() const {
  return infinite_ ? "T_inf" : "T_" + std::to_string(n_);
}

int Variable::degree() const {
  switch (letter) {
    case Letter::t:
      return 1;
    case Letter::d:
      return -1;
    default:
      return index;
  }
}

bool Alphabet::admits(const Variable& x) const {
  if (symmetric_) return x.letter == Letter::e && x.index >= -1;
  switch (x.letter) {
    case Letter::t:
    case Letter::d:
      return x.index == 0;
    case Letter::v:
      return !ring_.is_infinite() && ring_.has_letter(x.index);
    case Letter::E:
      return ring_.is_infinite() && x.index >= 0;
    default:
      return false;
  }
}

Letter Alphabet::indexed_letter() const {
  if (symmetric_) return Letter::e;
  return ring_.is_infinite() ? Letter::E : Letter::v;
}

std::string Alphabet::name() const {
  return symmetric_ ? "S(W)" : "gr " + ring_.name();
}

CommutativeMonomial::CommutativeMonomial(std::vector<Power> powers) {
  std::map<Variable, int> merged;
  for (const auto& [x, k] : powers) {
    if (k < 0) throw DomainError("negative exponent in commutative monomial");
    merged[x] += k;
  }
  for (const auto& [x, k] : merged) {
    if (k == 0) continue;
    powers_.emplace_back(x, k);
    order_ += x.order() * k;
    degree_ += static_cast<long>(x.degree()) * k;
  }
}

int CommutativeMonomial::exponent(const Variable& x) const {
  for (const auto& [y, k] : powers_)
    if (y == x) return k;
  return 0;
}

CommutativeMonomial operator*(const CommutativeMonomial& a,
                              const CommutativeMonomial& b) {
  std::vector<CommutativeMonomial::Power> all = a.powers_;
  all.insert(all.end(), b.powers_.begin(), b.powers_.end());
  return CommutativeMonomial(std::move(all));
}

bool operator<(const CommutativeMonomial& a, const CommutativeMonomial& b) {
  if (a.order_ != b.order_) return a.order_ > b.order_;
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return a.powers_ < b.powers_;
}

CommutativeElement CommutativeElement::constant(Alphabet alphabet,
                                                const Rational& c) {
  CommutativeElement x(alphabet);
  x.terms_.add(CommutativeMonomial(), c);
  return x;
}

CommutativeElement CommutativeElement::variable(Alphabet alphabet, Variable v) {
  return monomial(alphabet, CommutativeMonomial({{v, 1}}));
}

CommutativeElement CommutativeElement::monomial(Alphabet alphabet,
                                                CommutativeMonomial m,
                                                const Rational& c) {
  CommutativeElement x(alphabet);
  x.add_term(m, c);
  return x;
}

void CommutativeElement::add_term(const CommutativeMonomial& m,
                                  const Rational& c) {
  for (const auto& [v, k] : m.powers())
    if (!alphabet_.admits(v))
      throw IndexError("variable not in " + alphabet_.name());
  terms_.add(m, c);
}

CommutativeElement& CommutativeElement::operator+=(
    const CommutativeElement& other) {
  if (!(alphabet_ == other.alphabet_))
    throw ContextError("adding elements of " + alphabet_.name() + " and " +
                       other.alphabet_.name());
  terms_.add(other.terms_);
  return *this;
}

CommutativeElement& CommutativeElement::operator-=(
    const CommutativeElement& other) {
  if (!(alphabet_ == other.alphabet_))
    throw ContextError("subtracting elements of " + alphabet_.name() +
                       " and " + other.alphabet_.name());
  terms_.add(other.terms_, Rational(-1));
  return *this;
}

CommutativeElement& CommutativeElement::operator*=(const Rational& c) {
  terms_ = terms_.scaled(c);
  return *this;
}

CommutativeElement operator*(const CommutativeElement& a,
                             const CommutativeElement& b) {
  if (!(a.alphabet_ == b.alphabet_))
    throw ContextError("multiplying elements of " + a.alphabet_.name() +
                       " and " + b.alphabet_.name());
  CommutativeElement out(a.alphabet_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.terms_.add(ma * mb, ca * cb);
  return out;
}

CommutativeElement CommutativeElement::pow(int k) const {
  if (k < 0) throw DomainError("negative power");
  CommutativeElement result = constant(alphabet_, Rational(1));
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

int order(const CommutativeElement& x) {
  if (x.is_zero()) throw ZeroElementError("order of zero");
  int best = 0;
  for (const auto& [m, c] : x.terms()) best = std::max(best, m.order());
  return best;
}

std::optional<long> degree(const CommutativeElement& x) {
  if (x.is_zero()) throw ZeroElementError("degree of zero");
  std::optional<long> d;
  for (const auto& [m, c] : x.terms()) {
    if (d && *d != m.degree()) return std::nullopt;
    d = m.degree();
  }
  return d;
}

CommutativeElement substitute(
    const CommutativeElement& x, Alphabet target,
    const std::function<CommutativeElement(const Variable&)>& image) {
  std::map<Variable, CommutativeElement> cache;
  auto image_of = [&](const Variable& v) -> const CommutativeElement& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, image(v)).first;
    return it->second;
  };
  CommutativeElement out(target);
  for (const auto& [m, c] : x.terms()) {
    CommutativeElement term = CommutativeElement::constant(target, c);
    for (const auto& [v, k] : m.powers()) term = term * image_of(v).pow(k);
    out += term;
  }
  return out;
}

}  // namespace witt
