#include <doctest.h>

#include "witt/differentiators.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"

using namespace witt;

namespace {

WittElement word(std::initializer_list<int> w, long c = 1) {
  return WittElement::from_word(pbw::Word(w), Rational(c));
}

}  // namespace

TEST_CASE("small differentiators") {
  CHECK(omega(0, 4, 2) == word({4, 2}));
  CHECK(omega(1, 4, 2) == word({4, 2}) - word({3, 3}));
  CHECK(omega(2, 1, -1) == word({1, -1}) - word({0, 0}, 2) + word({-1, 1}));
  CHECK(omega(2, 1, -1) == parse_witt("e[1]*e[-1] - 2*e[0]^2 + e[-1]*e[1]"));
  CHECK(omega(3, 3, 0).is_zero());
  CHECK(omega(3, 5, 2).is_zero());
}

TEST_CASE("closed form agrees with the recursion") {
  for (int m = 0; m <= 6; ++m)
    for (int k = m - 1; k <= 8; ++k)
      for (int s = -1; s <= 6; ++s) CHECK(omega(m, k, s) == omega_recursive({m, k, s}));
}

TEST_CASE("differentiators are homogeneous quadratics") {
  for (int m = 0; m <= 6; ++m)
    for (int k = m - 1; k <= 8; ++k)
      for (int s = -1; s <= 6; ++s) {
        WittElement w = omega(m, k, s);
        if (w.is_zero()) continue;
        CHECK(degree(w) == static_cast<long>(k + s));
        CHECK(order(w) <= 2);
      }
  for (int m = 2; m <= 8; m += 2) CHECK(degree(omega(m, m - 1, -1)) == static_cast<long>(m - 2));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(omega(2, 0, 0), DomainError);
  CHECK_THROWS_AS(omega(0, 0, -2), DomainError);
  CHECK_THROWS_AS(omega(-1, 3, 0), DomainError);
  CHECK_THROWS_AS(omega_recursive({3, 1, 0}), DomainError);
  CHECK(DifferentiatorKey{4, 3, -1}.to_string() == "Omega^4_{3,-1}");
}

TEST_CASE("commutator formula instances") {
  // [e_{-1}, e_3 e_1] = 4 e_2 e_1 + 2 e_3 e_0.
  CHECK(commutator(WittElement::generator(-1), omega(0, 3, 1)) ==
        word({2, 1}, 4) + word({3, 0}, 2));
  CHECK(commutator(WittElement::generator(0), omega(2, 2, 0)) == omega(2, 2, 0) * Rational(2));
  VerificationReport r = check_commutator_formulas(3, 5, 3);
  CHECK(r.ok());
  CHECK(r.run > 0);
}

TEST_CASE("linear relations") {
  CHECK(omega(3, 3, -1) == omega(4, 3, -1) * Rational(BigInt(1), BigInt(2)));
  CHECK(omega(3, 2, 0) == omega(4, 3, -1) * Rational(BigInt(-1), BigInt(2)));
  for (int n = 1; n <= 3; ++n) CHECK(check_linear_relations(n, 4).ok());
  CHECK_THROWS_AS(check_linear_relations(0, 1), DomainError);
}

TEST_CASE("lowering to the kernel generator") {
  LoweringResult base = lowering_reduce({4, 3, -1}, 1);
  CHECK(base.lowerings == 0);
  CHECK(base.multiplicity == Rational(1));
  CHECK(base.terminal == DifferentiatorKey{4, 3, -1});

  LoweringResult one = lowering_reduce({4, 4, 0}, 1);
  CHECK(one.lowerings == 2);
  CHECK(one.positive_integer());
  // Oracle: apply ad(e_{-1}) twice by hand.
  WittElement em1 = WittElement::generator(-1);
  WittElement lowered = commutator(em1, commutator(em1, omega(4, 4, 0)));
  CHECK(lowered == omega(4, 3, -1) * *one.multiplicity);

  LoweringResult odd = lowering_reduce({3, 4, 0}, 1);
  CHECK(odd.terminal == DifferentiatorKey{3, 3, -1});
  CHECK(odd.positive_integer());
  CHECK(odd.relative == *odd.multiplicity * Rational(BigInt(1), BigInt(2)));

  LoweringResult other_side = lowering_reduce({3, 3, 1}, 1);
  CHECK(other_side.terminal == DifferentiatorKey{3, 2, 0});
  CHECK(other_side.positive_integer());
  CHECK(other_side.relative->sign() < 0);

  CHECK_THROWS_AS(lowering_reduce({3, 4, 1}, 1), DomainError);
  CHECK_THROWS_AS(lowering_reduce({5, 4, 0}, 1), DomainError);
  for (int n = 1; n <= 2; ++n)
    for (const auto& key : lowering_keys(n, 4)) CHECK(lowering_reduce(key, n).positive_integer());
}

TEST_CASE("the kernel generator for n = 1 kills every tensor density module") {
  // The action is polynomial in lambda of degree <= order(Omega) = 2, so
  // vanishing at five distinct values means it vanishes identically.
  const WittElement w = omega(4, 3, -1);
  for (Rational lambda : {Rational(0), Rational(1), Rational(-2), Rational(BigInt(1), BigInt(3)),
                          Rational(BigInt(-7), BigInt(5))})
    for (int j = 0; j <= 8; ++j)
      CHECK(density_action(lambda, w, DensityPolynomial{{j, Rational(1)}}).empty());
  // Omega^2_{1,-1} goes to -2(v_0^2 - v_0) and v_0 acts on F_lambda as lambda.
  CHECK(density_action(Rational(2), omega(2, 1, -1), DensityPolynomial{{2, Rational(1)}}) ==
        DensityPolynomial{{2, Rational(-4)}});
}
