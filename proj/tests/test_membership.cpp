#include <doctest.h>

#include "witt/differentiators.hpp"
#include "witt/linear_span.hpp"
#include "witt/membership.hpp"

using namespace witt;

namespace {

// Multisets of size k from L letters.
long multisets(long letters, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (letters + i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("PBW monomial enumeration") {
  for (int order = 0; order <= 3; ++order)
    for (int hi = -1; hi <= 4; ++hi) {
      long expected = 0;
      for (int k = 0; k <= order; ++k) expected += multisets(hi + 2, k);
      CHECK(static_cast<long>(pbw_monomials(order, -1, hi).size()) == expected);
    }
}

TEST_CASE("left multiples and right multiples of the kernel generator") {
  const WittElement G = omega(4, 3, -1);
  MonomialSpan<WittMonomial> span;
  // Left span in degree 4 with u of order <= 1.
  for (const auto& u : pbw_monomials(1, -1, 6)) {
    long e = 4 - u.degree();
    for (int m : {3, 4})
      for (long s = -1; e - s >= m - 1; ++s) {
        WittElement w = omega(m, static_cast<int>(e - s), static_cast<int>(s));
        if (!w.is_zero()) span.insert((WittElement::monomial(u) * w).terms());
      }
  }
  CHECK(span.member((G * WittElement::generator(2)).terms()).has_value());
  CHECK(span.member((WittElement::generator(2) * G).terms()).has_value());
}

TEST_CASE("one-sided generation at small bounds") {
  VerificationReport r = one_sided_generation_check(1, 1, 3);
  CHECK(r.ok());
  CHECK(r.run > 0);
}

TEST_CASE("degree-zero generators") {
  VerificationReport r = degree_zero_generation_check(3, 6);
  CHECK(r.ok());
  CHECK(r.run == 3);
  VerificationReport tight = degree_zero_generation_check(3, 4);
  CHECK_FALSE(tight.ok());
  CHECK(tight.first_failure->label.find("not found at order bound 4") != std::string::npos);
}
