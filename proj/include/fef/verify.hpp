#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fef/bloch.hpp"
#include "fef/rng.hpp"

namespace fef {

enum class VerifyLevel { Fast, Full };

struct SuiteResult {
  std::string name;
  long cases = 0;
  /// Largest observed deviation (or violation, for one-sided checks).
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

using BlochObjective = std::function<double(const BlochDecomposition&, const CMatrix&)>;

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Fast;
  std::uint64_t seed = kDefaultSeed;
  /// Bloch-form objective under test in the Bloch-objective suite. Replaced by
  /// the mutation test in tests/test_verify.cpp.
  BlochObjective bloch_objective;
};

SuiteResult verify_generator_orthogonality(const VerifyOptions& opts);
SuiteResult verify_generator_elements(const VerifyOptions& opts);
SuiteResult verify_generator_spectra(const VerifyOptions& opts);
SuiteResult verify_round_trip(const VerifyOptions& opts);
SuiteResult verify_purity(const VerifyOptions& opts);
SuiteResult verify_kyfan_invariance(const VerifyOptions& opts);
SuiteResult verify_bloch_objective(const VerifyOptions& opts);
SuiteResult verify_singlet_fraction(const VerifyOptions& opts);
SuiteResult verify_delta_envelope(const VerifyOptions& opts);
SuiteResult verify_bound_ordering(const VerifyOptions& opts);
SuiteResult verify_exact_diagonal(const VerifyOptions& opts);
SuiteResult verify_haar_moments(const VerifyOptions& opts);
SuiteResult verify_optimizer_lower_bound(const VerifyOptions& opts);
SuiteResult verify_sandwich(const VerifyOptions& opts);
SuiteResult verify_local_unitary_invariance(const VerifyOptions& opts);
SuiteResult verify_oracle_agreement(const VerifyOptions& opts);

/// All suites in a fixed order.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

}  // namespace fef
