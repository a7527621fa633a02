#pragma once

#include <compare>
#include <string>

namespace witt {

/// Which target ring an element lives in: T_n = A_1 (x) U(g_n) for finite n,
/// or T_inf = A_1 (x) U(W_{>=0}).
class TargetRing {
 public:
  static TargetRing finite(int n);
  static TargetRing infinite() { return TargetRing(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful for finite rings.
  int n() const { return n_; }

  /// Whether v_j / e_j is a letter of the ring (j >= 0, and j < n if finite).
  bool has_letter(int j) const { return j >= 0 && (infinite_ || j < n_); }

  /// Letters of index >= cap() vanish; -1 stands for "no cap".
  int cap() const { return infinite_ ? -1 : n_; }

  /// "T_3", "T_inf".
  std::string name() const;

  friend bool operator==(const TargetRing&, const TargetRing&) = default;

 private:
  TargetRing(bool infinite, int n) : infinite_(infinite), n_(n) {}
  bool infinite_;
  int n_;
};

}  // namespace witt
