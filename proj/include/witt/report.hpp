#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace witt {

/// Outcome of one checked case. lhs / rhs are only filled for failures.
struct CaseResult {
  bool ok = true;
  std::string label;
  std::string lhs;
  std::string rhs;

  static CaseResult pass(std::string label) { return {true, std::move(label), {}, {}}; }
  static CaseResult fail(std::string label, std::string lhs, std::string rhs) {
    return {false, std::move(label), std::move(lhs), std::move(rhs)};
  }
};

struct VerificationReport {
  std::string suite;
  std::size_t run = 0;
  std::size_t passed = 0;
  std::optional<CaseResult> first_failure;
  double seconds = 0.0;
  std::optional<std::uint64_t> seed;
  /// Free-form findings, e.g. the bounds at which a membership was found.
  std::vector<std::string> notes;

  bool ok() const { return run == passed; }
  void record(const CaseResult& c);
  /// Appends another report's cases (and notes) to this one.
  void absorb(const VerificationReport& other);

  /// Multi-line human readable text.
  std::string to_text() const;
  /// One JSON object.
  std::string to_json() const;
};

}  // namespace witt
