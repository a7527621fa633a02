#include "witt/morphisms.hpp"

#include <map>
#include <utility>

#include "witt/errors.hpp"

namespace witt {

MorphismContext MorphismContext::psi(int n) {
  if (n < 0) throw DomainError("Psi_n needs n >= 0");
  return {Kind::psi_n, n};
}

MorphismContext MorphismContext::phi(int n) {
  if (n < 0) throw DomainError("Phi_n needs n >= 0");
  return {Kind::phi_n, n};
}

TargetRing MorphismContext::ring() const {
  return (kind_ == Kind::psi_n || kind_ == Kind::phi_n)
             ? TargetRing::finite(n_)
             : TargetRing::infinite();
}

std::string MorphismContext::name() const {
  switch (kind_) {
    case Kind::psi_n:
      return "Psi_" + std::to_string(n_);
    case Kind::psi_infinity:
      return "Psi_inf";
    case Kind::phi_n:
      return "Phi_" + std::to_string(n_);
    case Kind::phi_infinity:
      return "Phi_inf";
  }
  return {};
}

TargetElement psi_generator(int k, TargetRing ring) {
  if (k < -1) throw IndexError("Witt generator index must be >= -1");
  thread_local std::map<std::pair<int, int>, TargetElement> cache;
  auto key = std::make_pair(ring.cap(), k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  TargetElement out(ring);
  out.add_term(TargetMonomial(k + 1, 1), Rational(1));
  // f = t^{k+1}: f^{(i+1)} / (i+1)! = C(k+1, i+1) t^{k-i}, zero once i > k.
  for (int i = 0; i <= k && ring.has_letter(i); ++i)
    out.add_term(TargetMonomial(k - i, 0, {{i, 1}}),
                 Rational(binomial(k + 1, i + 1)));
  cache.emplace(key, out);
  return out;
}

TargetElement psi(const MorphismContext& ctx, const WittElement& a) {
  if (!ctx.is_psi())
    throw ContextError(ctx.name() + " acts on S(W), not U(W)");
  TargetRing ring = ctx.ring();
  TargetElement out(ring);
  for (const auto& [m, c] : a.terms()) {
    TargetElement image = TargetElement::scalar(ring, c);
    for (auto [i, mult] : m.runs()) {
      TargetElement g = psi_generator(i, ring);
      for (int r = 0; r < mult; ++r) image = image * g;
    }
    out += image;
  }
  return out;
}

CommutativeElement phi(const MorphismContext& ctx, const CommutativeElement& x) {
  if (ctx.is_psi())
    throw ContextError(ctx.name() + " acts on U(W), not S(W)");
  if (!x.alphabet().is_symmetric())
    throw ContextError(ctx.name() + " expects an element of S(W)");
  TargetRing ring = ctx.ring();
  return substitute(x, Alphabet::graded(ring),
                    [&](const Variable& v) { return c_bar(v.index, ring); });
}

WittElement step_S(const WittElement& x) {
  const WittElement e0 = WittElement::generator(0);
  const WittElement e1 = WittElement::generator(1);
  const WittElement e2 = WittElement::generator(2);
  return Rational(4) * commutator(e2, commutator(e0, x)) +
         Rational(2) * commutator(e2, x) -
         Rational(3) * commutator(e1, commutator(e1, x));
}

TargetElement step_PsiS(const TargetElement& x, StepVariant variant) {
  if (!x.ring().is_infinite())
    throw ContextError("the step operator acts on T_inf, got " +
                       x.ring().name());
  TargetRing ring = TargetRing::infinite();
  const TargetElement c0 = psi_generator(0, ring);
  const TargetElement c1 = psi_generator(1, ring);
  const TargetElement c2 = psi_generator(2, ring);
  const TargetElement& middle = variant == StepVariant::e0 ? c0 : c2;
  return Rational(4) * t_commutator(c2, t_commutator(c0, x)) +
         Rational(2) * t_commutator(middle, x) -
         Rational(3) * t_commutator(c1, t_commutator(c1, x));
}

TargetElement psi_infty_omega_closed_form(int n) {
  if (n < 1) throw DomainError("closed form needs n >= 1");
  TargetRing ring = TargetRing::infinite();
  TargetElement out(ring);
  for (int j = 1; j <= 2 * n - 1; ++j) {
    Rational c = Rational(sign_power(j)) * Rational(binomial(2 * n, j));
    out += c * (TargetElement::letter(ring, 2 * n - 1 - j) *
                TargetElement::letter(ring, j - 1));
  }
  out.add_term(TargetMonomial(0, 1, {{2 * n - 1, 1}}), Rational(2));
  out.add_term(TargetMonomial(0, 0, {{2 * n - 2, 1}}), Rational(2 * n));
  return out;
}

}  // namespace witt
