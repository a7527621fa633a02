#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/sampler.hpp"
#include "witt/witt_algebra.hpp"

using namespace witt;

namespace {

WittElement from_oracle(const oracle::Combination& c) {
  WittElement x;
  for (const auto& [w, k] : c) x += WittElement::monomial(WittMonomial::from_word(w), k);
  return x;
}

WittElement e(int i) { return WittElement::generator(i); }

}  // namespace

TEST_CASE("normal ordering matches the rightmost-descent oracle") {
  Sampler s(7);
  for (int trial = 0; trial < 300; ++trial) {
    pbw::Word w;
    long len = s.uniform(0, 5);
    for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(s.uniform(-1, 5)));
    CHECK(WittElement::from_word(w) == from_oracle(oracle::normal_form(w)));
  }
}

TEST_CASE("truncated normal ordering matches the oracle") {
  Sampler s(8);
  for (int cap : {0, 1, 2, 3, 5}) {
    pbw::NormalOrderer engine(cap);
    for (int trial = 0; trial < 100; ++trial) {
      pbw::Word w;
      long len = s.uniform(0, 5);
      for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(s.uniform(0, 5)));
      oracle::Combination expected = oracle::normal_form(w, cap);
      Terms<pbw::Word> got = engine.normal_form(w);
      CHECK(got.size() == expected.size());
      for (const auto& [word, c] : expected) CHECK(got.coefficient(word) == c);
    }
  }
}

TEST_CASE("rewrite_leftmost applies the bracket at the first descent") {
  auto r = pbw::rewrite_leftmost({0, 2, 1, -1}, -1);
  REQUIRE(r.has_value());
  CHECK(r->position == 1);
  CHECK(r->swapped == pbw::Word{0, 1, 2, -1});
  CHECK(r->coefficient == Rational(-1));
  CHECK(r->contracted == pbw::Word{0, 3, -1});
  CHECK_FALSE(pbw::rewrite_leftmost({-1, 0, 0, 4}, -1).has_value());
  auto capped = pbw::rewrite_leftmost({2, 1}, 3);
  REQUIRE(capped.has_value());
  CHECK_FALSE(capped->contracted.has_value());
}

TEST_CASE("brackets of generators") {
  CHECK(bracket(-1, 1) == e(0) * Rational(2));
  CHECK(commutator(e(2), e(-1)) == e(1) * Rational(-3));
  CHECK(commutator(e(0), e(0)).is_zero());
  CHECK(bracket(-1, -1).is_zero());
  // [e_{-1}, e_1 e_1] = 2 e_0 e_1 + 2 e_1 e_0 by the Leibniz rule.
  WittElement expected = e(0) * e(1) * Rational(2) + e(1) * e(0) * Rational(2);
  CHECK(commutator(e(-1), e(1) * e(1)) == expected);
  CHECK(print_canonical(expected) == "4*e[0]*e[1] - 2*e[1]");
  CHECK_THROWS_AS(e(-2), IndexError);
  CHECK_THROWS_AS(bracket(-2, 0), IndexError);
}

TEST_CASE("Jacobi identity and associativity on random elements") {
  Sampler s(11);
  for (int trial = 0; trial < 50; ++trial) {
    WittElement a = s.witt_element(2, 2, 4), b = s.witt_element(2, 2, 4),
                c = s.witt_element(2, 2, 4);
    CHECK((a * b) * c == a * (b * c));
    WittElement jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                         commutator(c, commutator(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("order, degree and gr") {
  WittElement x = e(-1) * e(-1) * e(3) - e(1) * Rational(BigInt(1), BigInt(2));
  CHECK(order(x) == 3);
  CHECK(degree(x) == 1L);
  CHECK(print_canonical(x) == "e[-1]^2*e[3] - 1/2*e[1]");
  CHECK_FALSE(degree(e(0) + e(1)).has_value());
  CHECK_THROWS_AS(order(WittElement()), ZeroElementError);
  CHECK_THROWS_AS(degree(WittElement()), ZeroElementError);
  CHECK(gr(x) == parse_commutative("e[-1]^2*e[3]", Alphabet::symmetric()));
}

TEST_CASE("symmetrizer") {
  Alphabet S = Alphabet::symmetric();
  CHECK(sym(parse_commutative("e[0]*e[1]", S)) ==
        parse_witt("e[0]*e[1] - 1/2*e[1]"));
  CHECK(sym(parse_commutative("e[2]^2", S)) == e(2) * e(2));
  CHECK(sym(parse_commutative("3", S)) == WittElement::scalar(Rational(3)));
  // Oracle: average over all 3! orderings, duplicates included.
  pbw::Word w = {-1, 1, 1};
  WittElement avg;
  std::sort(w.begin(), w.end());
  do avg += WittElement::from_word(w); while (std::next_permutation(w.begin(), w.end()));
  // The three distinct arrangements each occur twice among 3! permutations.
  CHECK(sym(parse_commutative("e[-1]*e[1]^2", S)) == avg * Rational(BigInt(2), BigInt(6)));
  CHECK_THROWS_AS(sym(CommutativeElement(Alphabet::graded(TargetRing::finite(2)))),
                  ContextError);
}

TEST_CASE("gr inverts sym on homogeneous-order elements") {
  Sampler s(12);
  for (int trial = 0; trial < 50; ++trial) {
    CommutativeElement x(Alphabet::symmetric());
    while (x.is_zero()) x = s.symmetric_element(3, static_cast<int>(s.uniform(1, 4)), 5);
    CHECK(gr(sym(x)) == x);
  }
}

TEST_CASE("density action matches t^{i+1} d acting on densities") {
  for (Rational lambda : {Rational(0), Rational(1), Rational(BigInt(-3), BigInt(2))})
    for (int i = -1; i <= 4; ++i)
      for (int b = 0; b <= 5; ++b) {
        DensityPolynomial g = {{b, Rational(1)}};
        oracle::Poly expected = oracle::density(lambda, i, g);
        CHECK(density_action(lambda, i, g) == expected);
      }
}

TEST_CASE("density action is a representation") {
  Sampler s(13);
  Rational lambda(BigInt(2), BigInt(7));
  for (int trial = 0; trial < 40; ++trial) {
    WittElement a = s.witt_element(2, 2, 3), b = s.witt_element(2, 2, 3);
    DensityPolynomial g = {{static_cast<int>(s.uniform(0, 4)), Rational(1)}};
    CHECK(density_action(lambda, a * b, g) ==
          density_action(lambda, a, density_action(lambda, b, g)));
  }
}

TEST_CASE("products of generators realize the bracket") {
  for (int i = -1; i <= 8; ++i)
    for (int j = -1; j <= 8; ++j) CHECK(e(i) * e(j) - e(j) * e(i) == bracket(i, j));
  CHECK(bracket(1, 2) == e(3));
  CHECK(bracket(-1, 3) == e(2) * Rational(4));
  CHECK(e(2) * e(1) == parse_witt("e[1]*e[2] - e[3]"));
}

TEST_CASE("Jacobi identity on structure constants") {
  for (int i = -1; i <= 6; ++i)
    for (int j = -1; j <= 6; ++j)
      for (int k = -1; k <= 6; ++k) {
        WittElement jacobi = commutator(e(i), bracket(j, k)) + commutator(e(j), bracket(k, i)) +
                             commutator(e(k), bracket(i, j));
        CHECK(jacobi.is_zero());
      }
}

TEST_CASE("degree is additive and order is additive") {
  Sampler s(14);
  for (int trial = 0; trial < 100; ++trial) {
    WittElement a = WittElement::monomial(s.witt_monomial(3, 5), s.coefficient());
    WittElement b = WittElement::monomial(s.witt_monomial(3, 5), s.coefficient());
    WittElement ab = a * b;
    CHECK(degree(ab) == *degree(a) + *degree(b));
    CHECK(order(ab) == order(a) + order(b));
  }
  CHECK(order(e(3) * e(5)) == 2);
  CHECK(degree(e(3) * e(5)) == 8L);
  for (int k = 0; k <= 5; ++k) CHECK(commutator(e(0), e(k)) == e(k) * Rational(k));
}

TEST_CASE("normal ordering terminates with a bounded number of rewrites") {
  Sampler s(15);
  pbw::NormalOrderer engine;
  for (int trial = 0; trial < 100; ++trial) {
    pbw::Word w;
    for (int i = 0; i < 6; ++i) w.push_back(static_cast<int>(s.uniform(-1, 6)));
    std::size_t before = engine.rewrite_steps();
    engine.normal_form(w);
    // Each word is rewritten at most once thanks to the memo, and every word
    // reached has length <= 6 and letters below 6 * 6.
    CHECK(engine.rewrite_steps() - before <= engine.cache_size());
  }
}

TEST_CASE("symmetrizer examples") {
  Alphabet S = Alphabet::symmetric();
  CHECK(sym(parse_commutative("e[5]", S)) == e(5));
  CHECK(gr(sym(parse_commutative("e[-1]*e[3]", S))) == parse_commutative("e[-1]*e[3]", S));
  CHECK(gr(sym(parse_commutative("e[0]*e[1]^2", S))) == parse_commutative("e[0]*e[1]^2", S));
  CHECK(gr(e(2) * e(1)) == parse_commutative("e[1]*e[2]", S));
}

TEST_CASE("density examples") {
  for (Rational lambda : {Rational(0), Rational(3), Rational(BigInt(-1), BigInt(4))})
    for (int b = 0; b <= 5; ++b) {
      DensityPolynomial want;
      if (Rational(b) + lambda != Rational(0)) want[b] = Rational(b) + lambda;
      CHECK(density_action(lambda, 0, {{b, Rational(1)}}) == want);
    }
  // lambda = -1 is the adjoint module: e_a . t^{b+1} = (b - a) t^{a+b+1}.
  for (int a = -1; a <= 4; ++a)
    for (int b = -1; b <= 4; ++b) {
      DensityPolynomial got = density_action(Rational(-1), a, {{b + 1, Rational(1)}});
      DensityPolynomial want;
      if (b != a) want[a + b + 1] = Rational(b - a);
      CHECK(got == want);
    }
}
