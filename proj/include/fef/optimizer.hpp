#pragma once

#include <cstdint>

#include "fef/bloch.hpp"
#include "fef/rng.hpp"
#include "fef/types.hpp"

namespace fef {

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  double step_tolerance = 1e-10;
  double objective_tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
};

struct OptimizationResult {
  /// Best objective found; a lower estimate of F(rho).
  double best_value = 0.0;
  CMatrix best_unitary;
  /// Restarts finishing within objective_tolerance of best_value.
  int restarts_agreeing = 0;
  long iterations_total = 0;
  /// At least one restart met the step tolerance before the iteration cap.
  bool converged = false;
  int best_restart = 0;
};

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
CMatrix haar_unitary(int d, Rng& rng);

/// Multistart maximization of <phi_+|(U^dagger (x) I) rho (U (x) I)|phi_+>
/// over U(d). Restart 0 starts at the identity, restart k >= 1 at a Haar
/// sample drawn from split_seed(cfg.seed, k), so a run with more restarts
/// extends the start set of a run with fewer.
///
/// Each local search moves in exponential coordinates U -> U exp(iH(v)),
/// H(v) Hermitian with d^2 real parameters. A sweep visits every
/// coordinate, fits a parabola through three samples and jumps to its
/// vertex, then tries a pattern move along the sweep's net displacement.
/// The step scale adapts to the accepted moves; the search stops once it
/// falls below step_tolerance or max_iterations sweeps have run.
OptimizationResult maximize_fef(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace fef
