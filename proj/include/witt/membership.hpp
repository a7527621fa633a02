#pragma once

#include <vector>

#include "witt/report.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// PBW monomials of order <= max_order with all indices in [lo, hi],
/// including the empty one.
std::vector<WittMonomial> pbw_monomials(int max_order, int lo, int hi);

/// For G = Omega^{2n+2}_{2n+1,-1} and every pair of PBW monomials x, y with
/// ord(x) + ord(y) <= order_bound and indices in [-1, index_bound], checks
/// that x G y lies in the left span of
///   { u Omega^m_{k,s} : m in {2n+1, 2n+2}, ord(u) <= order_bound }
/// in its degree (a finite set once the degree is fixed), and that Psi_n
/// kills every differentiator used in those spans.
VerificationReport one_sided_generation_check(int n, int order_bound, int index_bound,
                                              unsigned jobs = 1);

/// Spans all words in e_0, e_{-1} e_1, e_{-1}^2 e_2 of total order
/// <= order_bound and checks e_{-1}^k e_k lies in the span for 1 <= k <= k_max.
/// Notes record the smallest bound at which each membership appears.
VerificationReport degree_zero_generation_check(int k_max, int order_bound);

}  // namespace witt
