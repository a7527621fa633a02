#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "witt/report.hpp"

namespace witt {

/// Unset fields fall back to each suite's default range.
struct VerifyOptions {
  std::optional<int> n;
  std::optional<int> m_max;
  std::optional<int> k_max;
  std::optional<int> order_bound;
  std::optional<int> index_bound;
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
};

VerificationReport verify_kernel(const VerifyOptions& opt);
VerificationReport verify_image(const VerifyOptions& opt);
VerificationReport verify_step(const VerifyOptions& opt);
VerificationReport verify_commutators(const VerifyOptions& opt);
VerificationReport verify_relations(const VerifyOptions& opt);
VerificationReport verify_closed_form(const VerifyOptions& opt);
VerificationReport verify_pi_phi(const VerifyOptions& opt);
VerificationReport verify_lowering(const VerifyOptions& opt);
VerificationReport verify_morphisms(const VerifyOptions& opt);
VerificationReport verify_one_sided(const VerifyOptions& opt);
VerificationReport verify_degree_zero(const VerifyOptions& opt);
VerificationReport verify_engine(const VerifyOptions& opt);

/// Suite names in acceptance order (excluding "all").
const std::vector<std::string>& suite_names();
/// Runs one named suite and fills in its wall time. Throws
/// std::invalid_argument on an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace witt
