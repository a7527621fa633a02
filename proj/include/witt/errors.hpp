#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witt {

/// A generator or letter index outside the ring's range (e_i with i < -1,
/// v_j with j >= n, ...).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// order / degree / gr requested of the zero element.
class ZeroElementError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands living in different rings (T_2 times T_3, ...).
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside an operation's domain (differentiator keys, quotient
/// targets, excluded lowering cases).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " +
                              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace witt
