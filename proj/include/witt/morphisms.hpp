#pragma once

#include <string>

#include "witt/commutative.hpp"
#include "witt/target_ring.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// Which orbit map (or associated graded map) to apply.
class MorphismContext {
 public:
  enum class Kind { psi_n, psi_infinity, phi_n, phi_infinity };

  static MorphismContext psi(int n);
  static MorphismContext psi_infinity() { return {Kind::psi_infinity, 0}; }
  static MorphismContext phi(int n);
  static MorphismContext phi_infinity() { return {Kind::phi_infinity, 0}; }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  bool is_psi() const {
    return kind_ == Kind::psi_n || kind_ == Kind::psi_infinity;
  }
  TargetRing ring() const;
  std::string name() const;

 private:
  MorphismContext(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

/// Psi_n / Psi_inf applied to a generator:
/// e_k -> t^{k+1} d + sum_i C(k+1, i+1) t^{k-i} v_i.
TargetElement psi_generator(int k, TargetRing ring);

/// Orbit homomorphism U(W_{>=-1}) -> T_n or T_inf. Throws ContextError for
/// a phi context.
TargetElement psi(const MorphismContext& ctx, const WittElement& a);
inline TargetElement psi(int n, const WittElement& a) {
  return psi(MorphismContext::psi(n), a);
}
inline TargetElement psi_infinity(const WittElement& a) {
  return psi(MorphismContext::psi_infinity(), a);
}

/// Associated graded map S(W_{>=-1}) -> gr T_n / gr T_inf, e-bar_k -> c-bar_k.
CommutativeElement phi(const MorphismContext& ctx, const CommutativeElement& x);

/// S(x) = 4[e_2, [e_0, x]] + 2[e_2, x] - 3[e_1, [e_1, x]].
WittElement step_S(const WittElement& x);

/// Middle term of the T_inf step operator: the e_0 form is the one printed
/// alongside the operator's definition, the e_2 form is the one that
/// intertwines with step_S through Psi_inf.
enum class StepVariant { e0, e2 };

/// 4[c_2, [c_0, X]] + 2[c_mid, X] - 3[c_1, [c_1, X]] with c_i = Psi_inf(e_i)
/// and c_mid = c_0 or c_2 per the variant. X must live in T_inf.
TargetElement step_PsiS(const TargetElement& x,
                        StepVariant variant = StepVariant::e2);

/// sum_{j=1}^{2n-1} (-1)^j C(2n, j) e_{2n-1-j} e_{j-1} + 2 d e_{2n-1}
/// + 2n e_{2n-2} in T_inf, for n >= 1.
TargetElement psi_infty_omega_closed_form(int n);

}  // namespace witt
