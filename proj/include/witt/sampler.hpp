#pragma once

#include <cstdint>
#include <random>

#include "witt/commutative.hpp"
#include "witt/target_ring.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// Seeded generator of random elements. mt19937_64 output is fixed by the
/// standard, and ranges are reduced by hand, so streams agree across
/// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  Rational coefficient();  // nonzero, numerator in [-5, 5], denominator in [1, 3]

  /// Non-decreasing word of the given length with letters in [lo, hi].
  std::vector<int> sorted_word(int length, int lo, int hi);
  WittMonomial witt_monomial(int max_order, int hi);
  WittElement witt_element(int max_terms, int max_order, int hi);
  TargetMonomial target_monomial(const TargetRing& ring, int max_order, int max_t,
                                 int hi);
  TargetElement target_element(const TargetRing& ring, int max_terms, int max_order,
                               int max_t, int hi);
  /// Element of T_ring with no t letters.
  TargetElement t_free_element(const TargetRing& ring, int max_terms, int max_order,
                               int hi);
  /// Every monomial has exactly `order` variables e-bar_i, i in [-1, hi].
  CommutativeElement symmetric_element(int max_terms, int order, int hi);
  CommutativeElement graded_element(const TargetRing& ring, int max_terms,
                                    int max_order, int max_t, int hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace witt
