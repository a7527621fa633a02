#include <doctest.h>

#include "witt/differentiators.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/morphisms.hpp"
#include "witt/sampler.hpp"

using namespace witt;

namespace {

TargetElement T(const char* text, TargetRing r) { return parse_target(text, r); }
WittElement e(int i) { return WittElement::generator(i); }

}  // namespace

TEST_CASE("generator images") {
  TargetRing t2 = TargetRing::finite(2), inf = TargetRing::infinite();
  CHECK(psi_generator(-1, t2) == T("d", t2));
  CHECK(psi_generator(0, t2) == T("t*d + v[0]", t2));
  CHECK(psi_generator(3, t2) == T("t^4*d + 4*t^3*v[0] + 6*t^2*v[1]", t2));
  CHECK(psi_generator(2, inf) == T("t^3*d + 3*t^2*E[0] + 3*t*E[1] + E[2]", inf));
  CHECK(psi_infinity(e(1)) == T("t^2*d + 2*t*E[0] + E[1]", inf));
}

TEST_CASE("images of brackets are brackets of images") {
  for (int n : {0, 1, 2, 4})
    for (int i = -1; i <= 6; ++i)
      for (int j = -1; j <= 6; ++j) {
        auto ctx = MorphismContext::psi(n);
        CHECK(psi(ctx, bracket(i, j)) ==
              t_commutator(psi_generator(i, ctx.ring()), psi_generator(j, ctx.ring())));
      }
  for (int i = -1; i <= 6; ++i)
    for (int j = -1; j <= 6; ++j)
      CHECK(psi_infinity(bracket(i, j)) == t_commutator(psi_infinity(e(i)), psi_infinity(e(j))));
}

TEST_CASE("kernel and image values") {
  for (int n = 1; n <= 4; ++n) CHECK(psi(n, omega(2 * n + 2, 2 * n + 1, -1)).is_zero());
  CHECK(print_canonical(psi(4, omega(8, 7, -1))) == "70*v[3]^2");
  CHECK(print_canonical(psi(2, omega(4, 3, -1))) == "6*v[1]^2");
  TargetRing t1 = TargetRing::finite(1);
  CHECK(psi(1, omega(2, 1, -1)) == T("-2*v[0]^2 + 2*v[0]", t1));
  // Psi_n does not kill the generator of the next kernel down.
  CHECK_FALSE(psi(2, omega(4, 3, -1)).is_zero());
}

TEST_CASE("associated graded map") {
  TargetRing t2 = TargetRing::finite(2);
  Alphabet S = Alphabet::symmetric();
  auto ctx = MorphismContext::phi(2);
  CHECK(phi(ctx, parse_commutative("e[1]", S)) == c_bar(1, t2));
  CHECK(phi(ctx, parse_commutative("e[-1]*e[0]", S)) == c_bar(-1, t2) * c_bar(0, t2));
  CHECK_THROWS_AS(phi(MorphismContext::psi(2), parse_commutative("e[1]", S)), ContextError);
  CHECK_THROWS_AS(psi(MorphismContext::phi(2), e(1)), ContextError);
  CHECK_THROWS_AS(MorphismContext::psi(-1), DomainError);
}

TEST_CASE("gr of a Psi image is Phi of gr") {
  Sampler s(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(s.uniform(1, 4));
    WittElement a = s.witt_element(2, 3, 5);
    if (a.is_zero()) continue;
    CommutativeElement top = phi(MorphismContext::phi(n), gr(a));
    TargetElement image = psi(n, a);
    if (!top.is_zero()) {
      REQUIRE_FALSE(image.is_zero());
      CHECK(t_gr(image) == top);
    }
  }
}

TEST_CASE("step operators") {
  // Low-m instances of the step recursion, coefficient m^2 - 9m + 12.
  CHECK(step_S(omega(0, -1, -1)) == omega(2, 1, -1) * Rational(12));
  CHECK(step_S(omega(2, 1, -1)) == omega(4, 3, -1) * Rational(-2));
  CHECK(step_S(omega(4, 3, -1)) == omega(6, 5, -1) * Rational(-8));
  Sampler s(32);
  for (int trial = 0; trial < 30; ++trial) {
    WittElement x = s.witt_element(2, 2, 4);
    CHECK(psi_infinity(step_S(x)) == step_PsiS(psi_infinity(x), StepVariant::e2));
  }
  WittElement w = omega(2, 1, -1);
  CHECK_FALSE(psi_infinity(step_S(w)) == step_PsiS(psi_infinity(w), StepVariant::e0));
  CHECK_THROWS_AS(step_PsiS(T("d", TargetRing::finite(2))), ContextError);
}

TEST_CASE("closed form of Psi_inf on the even differentiators") {
  for (int n = 1; n <= 4; ++n)
    CHECK(psi_infinity(omega(2 * n, 2 * n - 1, -1)) == psi_infty_omega_closed_form(n));
  CHECK_THROWS_AS(psi_infty_omega_closed_form(0), DomainError);
}

TEST_CASE("projection values") {
  TargetRing inf = TargetRing::infinite();
  CHECK(pi_projection(psi_infinity(e(3)) * psi_infinity(e(-1))) == T("d*E[3]", inf));
  CHECK(pi_projection(psi_infinity(e(-1)) * psi_infinity(e(3))) == T("d*E[3] + 4*E[2]", inf));
}

TEST_CASE("morphism examples") {
  TargetRing t2 = TargetRing::finite(2);
  for (int n : {0, 3, 6}) CHECK(psi(n, e(-1)) == T("d", TargetRing::finite(n)));
  CHECK(psi(2, e(1)) == T("t^2*d + 2*t*v[0] + v[1]", t2));
  CHECK(psi(2, omega(4, 3, -1)) == T("6*v[1]^2", t2));
  Alphabet S = Alphabet::symmetric();
  CHECK(phi(MorphismContext::phi(3), parse_commutative("e[-1]", S)) ==
        parse_commutative("d", Alphabet::graded(TargetRing::finite(3))));
  CHECK(t_gr(psi(2, omega(2, 1, -1))) == phi(MorphismContext::phi(2), gr(omega(2, 1, -1))));
  CHECK(quotient(psi(5, e(4)), 2) == psi(2, e(4)));
  CHECK(quotient(psi_infty_omega_closed_form(2), 2) == T("6*v[1]^2", t2));
}

TEST_CASE("Phi is multiplicative") {
  Sampler s(33);
  for (int trial = 0; trial < 50; ++trial) {
    auto ctx = trial % 5 ? MorphismContext::phi(static_cast<int>(s.uniform(0, 4)))
                         : MorphismContext::phi_infinity();
    CommutativeElement x = s.symmetric_element(2, static_cast<int>(s.uniform(0, 2)), 5);
    CommutativeElement y = s.symmetric_element(2, static_cast<int>(s.uniform(0, 2)), 5);
    CHECK(phi(ctx, x * y) == phi(ctx, x) * phi(ctx, y));
  }
}

TEST_CASE("step operator on T_inf") {
  TargetRing inf = TargetRing::infinite();
  CHECK(step_PsiS(TargetElement::scalar(inf, Rational(1))).is_zero());
  CHECK(step_S(WittElement::scalar(Rational(1))).is_zero());
  for (int j = 0; j <= 3; ++j) {
    WittElement w = omega(2 * j, 2 * j - 1, -1);
    CHECK(psi_infinity(step_S(w)) == step_PsiS(psi_infinity(w)));
  }
  CHECK(in_L(step_PsiS(T("d^2", inf))));
  Sampler s(34);
  for (int trial = 0; trial < 50; ++trial) {
    TargetElement x = s.t_free_element(inf, 3, 3, 4);
    CHECK(in_L(step_PsiS(x)));
  }
}
