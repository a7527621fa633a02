#pragma once

#include <string>

#include "witt/rational.hpp"
#include "witt/report.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// Names Omega^m_{k,s}; in the domain when m >= 0, s >= -1 and k >= m - 1.
struct DifferentiatorKey {
  int m = 0;
  int k = 0;
  int s = 0;

  bool in_domain() const { return m >= 0 && s >= -1 && k >= m - 1; }
  /// Throws DomainError outside the domain.
  void validate() const;
  /// "Omega^4_{3,-1}"
  std::string to_string() const;

  friend auto operator<=>(const DifferentiatorKey&, const DifferentiatorKey&) = default;
};

/// sum_{i=0}^m (-1)^i C(m, i) e_{k-i} e_{s+i}, normal-ordered.
WittElement omega(const DifferentiatorKey& key);
inline WittElement omega(int m, int k, int s) { return omega({m, k, s}); }

/// Same element built from Omega^0_{k,s} = e_k e_s and
/// Omega^{m+1}_{k,s} = Omega^m_{k,s} - Omega^m_{k-1,s+1}.
WittElement omega_recursive(const DifferentiatorKey& key);

/// Checks [e_j, Omega^m_{k,s}] for j = -1, 0, 1, 2 against the differentiator
/// expansions, for every in-domain key with m <= m_max, k <= k_max,
/// s <= s_max. Four cases per key.
VerificationReport check_commutator_formulas(int m_max, int k_max, int s_max,
                                             unsigned jobs = 1);

/// Omega^{2n+1}_{2n+1,-1} = (1/2) Omega^{2n+2}_{2n+1,-1},
/// -Omega^{2n+1}_{2n,0} = (1/2) Omega^{2n+2}_{2n+1,-1} and
/// Omega^{2n+1}_{2n+1+s,s} = 0 for -1 <= s <= s_max.
VerificationReport check_linear_relations(int n, int s_max);

struct LoweringResult {
  /// ad(e_{-1})^lowerings applied to the key's differentiator.
  WittElement lowered;
  int lowerings = 0;
  /// Key the result is compared with: Omega^{2n+2}_{2n+1,-1} for
  /// m = 2n + 2, Omega^{2n+1}_{2n+1,-1} when k - s > 2n + 1 and
  /// Omega^{2n+1}_{2n,0} when k - s < 2n + 1. Lowering never crosses the
  /// vanishing diagonal k - s = 2n + 1, and these two keys sit on either side.
  DifferentiatorKey terminal;
  /// lowered = multiplicity * Omega(terminal); unset when not proportional.
  std::optional<Rational> multiplicity;
  /// lowered = relative * Omega^{2n+2}_{2n+1,-1}; unset when not proportional.
  std::optional<Rational> relative;

  bool positive_integer() const {
    return multiplicity && multiplicity->is_integer() && multiplicity->sign() > 0;
  }
};

/// Applies ad(e_{-1}) exactly k + s - 2n times to Omega^m_{k,s}, for
/// m in {2n+1, 2n+2}. Throws DomainError for other m, for out-of-domain keys
/// and for the vanishing diagonal m = k - s = 2n + 1.
LoweringResult lowering_reduce(const DifferentiatorKey& key, int n);

/// Every key lowering_reduce accepts with k + s <= 2n + extra.
std::vector<DifferentiatorKey> lowering_keys(int n, int extra);

}  // namespace witt
