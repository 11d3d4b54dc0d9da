#pragma once

#include <optional>

#include "fef/bloch.hpp"
#include "fef/bounds.hpp"
#include "fef/optimizer.hpp"

namespace fef {

/// Gap under which the tightest upper bound and f(rho) are taken to pin F.
inline constexpr double kPinTol = 1e-12;
inline constexpr double kSandwichSlack = 1e-9;

enum class FidelitySource { Exact, Numeric, UpperBound };

const char* to_string(FidelitySource s);

struct BoundReport {
  int dim = 0;
  double singlet_fraction = 0.0;
  double thm1_bound = 0.0;
  BoundBreakdown thm1_terms;
  double cor1_bound = 0.0;
  double prior_bound = 0.0;
  std::optional<double> exact_thm3;
  /// Sign-aware two-qubit value; present iff d = 2.
  std::optional<double> two_qubit_exact;
  /// (1 + ||T||_KF)/4; present iff d = 2.
  std::optional<double> two_qubit_formula;
  /// f(rho) when the tightest upper bound is within kPinTol of it.
  std::optional<double> pinned_fef;
  std::optional<double> numeric_fef;
  std::optional<int> restarts_agreeing;
  std::optional<bool> optimizer_converged;
  double optimal_fidelity = 0.0;
  FidelitySource fidelity_source = FidelitySource::UpperBound;
  Usefulness useful = Usefulness::Undetermined;

  double tightest_upper() const;
  /// Exact FEF when known: diagonal-correlation class, two-qubit, or pinned.
  std::optional<double> exact_fef() const;
};

/// Every closed-form quantity for rho; with an optimizer config the numeric
/// lower estimate is added as well.
BoundReport full_report(const DensityMatrix& rho,
                        const std::optional<OptimizerConfig>& optimizer = std::nullopt);

/// Raised when f - slack <= numeric <= min(upper bounds) + slack fails.
class CertificationError : public Error {
 public:
  CertificationError(double singlet, double numeric, double thm1, double cor1, double prior);

  double singlet, numeric, thm1, cor1, prior;
};

/// full_report with the optimizer, plus the sandwich check.
BoundReport certify(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace fef
