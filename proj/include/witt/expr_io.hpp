#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "witt/commutative.hpp"
#include "witt/target_ring.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// Ring named by a context tag: "uw", "t:N", "t:inf", "s", "grt:N", "grt:inf".
class RingSpec {
 public:
  enum class Kind { witt, target, symmetric, graded };

  static RingSpec witt() { return {Kind::witt, TargetRing::infinite()}; }
  static RingSpec target(TargetRing r) { return {Kind::target, r}; }
  static RingSpec symmetric() { return {Kind::symmetric, TargetRing::infinite()}; }
  static RingSpec graded(TargetRing r) { return {Kind::graded, r}; }
  /// Throws std::invalid_argument on an unknown tag.
  static RingSpec parse(std::string_view tag);

  Kind kind() const { return kind_; }
  const TargetRing& ring() const { return ring_; }
  std::string tag() const;

 private:
  RingSpec(Kind kind, TargetRing ring) : kind_(kind), ring_(ring) {}
  Kind kind_;
  TargetRing ring_;
};

using AnyElement = std::variant<WittElement, TargetElement, CommutativeElement>;

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := ['-'] (rational | [rational '*'] factor ('*' factor)*)
///   factor := atom ['^' posint]
///   atom   := e[i] | E[j] | v[j] | t | d
/// Whitespace is ignored and "∂" is accepted for d. Throws ParseError on bad
/// syntax, ContextError on an atom the ring lacks, IndexError on a bad index.
AnyElement parse(std::string_view text, const RingSpec& ring);
WittElement parse_witt(std::string_view text);
TargetElement parse_target(std::string_view text, TargetRing ring);
CommutativeElement parse_commutative(std::string_view text, Alphabet alphabet);

/// Terms in canonical monomial order joined by " + " / " - ", unit
/// coefficients suppressed, "0" for zero.
std::string print_canonical(const WittElement& x);
std::string print_canonical(const TargetElement& x);
std::string print_canonical(const CommutativeElement& x);
std::string print_canonical(const AnyElement& x);

/// {"ring": tag, "terms": [{"coeff": "p/q", "monomial": [[atom, index, exp], ...]}]}
/// with a null index for t and d.
std::string export_json(const AnyElement& x, int indent = -1);

}  // namespace witt
