#include "witt/sampler.hpp"

#include <algorithm>

namespace witt {

long Sampler::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng_(); while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Sampler::coefficient() {
  long num = uniform(1, 5) * (uniform(0, 1) ? 1 : -1);
  return Rational(BigInt(num), BigInt(uniform(1, 3)));
}

std::vector<int> Sampler::sorted_word(int length, int lo, int hi) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back(static_cast<int>(uniform(lo, hi)));
  std::sort(w.begin(), w.end());
  return w;
}

WittMonomial Sampler::witt_monomial(int max_order, int hi) {
  return WittMonomial::from_word(sorted_word(static_cast<int>(uniform(0, max_order)), -1, hi));
}

WittElement Sampler::witt_element(int max_terms, int max_order, int hi) {
  WittElement x;
  long terms = uniform(1, max_terms);
  for (long i = 0; i < terms; ++i)
    x += WittElement::monomial(witt_monomial(max_order, hi), coefficient());
  return x;
}

TargetMonomial Sampler::target_monomial(const TargetRing& ring, int max_order,
                                        int max_t, int hi) {
  int order = static_cast<int>(uniform(0, max_order));
  int d = static_cast<int>(uniform(0, order));
  int top = ring.is_infinite() ? hi : std::min(hi, ring.n() - 1);
  int letters = top < 0 ? 0 : order - d;
  if (top < 0) d = order;
  return TargetMonomial::from_word(static_cast<int>(uniform(0, max_t)), d,
                                   sorted_word(letters, 0, std::max(top, 0)));
}

TargetElement Sampler::target_element(const TargetRing& ring, int max_terms,
                                      int max_order, int max_t, int hi) {
  TargetElement x(ring);
  long terms = uniform(1, max_terms);
  for (long i = 0; i < terms; ++i)
    x.add_term(target_monomial(ring, max_order, max_t, hi), coefficient());
  return x;
}

TargetElement Sampler::t_free_element(const TargetRing& ring, int max_terms,
                                      int max_order, int hi) {
  return target_element(ring, max_terms, max_order, 0, hi);
}

CommutativeElement Sampler::symmetric_element(int max_terms, int order, int hi) {
  Alphabet alphabet = Alphabet::symmetric();
  CommutativeElement x(alphabet);
  long terms = uniform(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    std::vector<CommutativeMonomial::Power> powers;
    for (int j : sorted_word(order, -1, hi)) powers.emplace_back(Variable::e(j), 1);
    x.add_term(CommutativeMonomial(std::move(powers)), coefficient());
  }
  return x;
}

CommutativeElement Sampler::graded_element(const TargetRing& ring, int max_terms,
                                           int max_order, int max_t, int hi) {
  Alphabet alphabet = Alphabet::graded(ring);
  CommutativeElement x(alphabet);
  long terms = uniform(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    TargetMonomial m = target_monomial(ring, max_order, max_t, hi);
    std::vector<CommutativeMonomial::Power> powers = {{Variable::t(), m.t_exp()},
                                                      {Variable::d(), m.d_exp()}};
    for (auto [j, mult] : m.runs())
      powers.emplace_back(ring.is_infinite() ? Variable::E(j) : Variable::v(j), mult);
    x.add_term(CommutativeMonomial(std::move(powers)), coefficient());
  }
  return x;
}

}  // namespace witt
