#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fef/optimizer.hpp"
#include "fef/states.hpp"

namespace fef {

struct SweepRow {
  double param = 0.0;
  double f = 0.0;
  double thm1 = 0.0;
  double cor1 = 0.0;
  double prior = 0.0;
  std::optional<double> fef_numeric;
  std::optional<double> fef_exact;
};

struct SweepSpec {
  /// One of example1, example2, phix, rho3, isotropic.
  Family family = Family::Example1;
  /// Local dimension; used by isotropic only.
  int dim = 3;
  double from = 0.0;
  double to = 1.0;
  int steps = 101;
  /// When set, each grid point k is optimized with seed
  /// split_seed(optimizer->seed, k).
  std::optional<OptimizerConfig> optimizer;
};

/// Closed domain of the sweep parameter for a family.
std::pair<double, double> sweep_domain(Family family, int dim);

/// State at parameter value `param`.
DensityMatrix sweep_state(Family family, int dim, double param);

/// Evenly spaced grid from..to inclusive (steps >= 2, or 1 for a single point).
std::vector<double> sweep_grid(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepHeader = "param,f,thm1,cor1,prior,fef_numeric,fef_exact";

/// Header plus one line per row; empty fields for absent optionals.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Parameters where f(rho) - 1/d changes sign, bracketed on the sweep grid
/// and refined by bisection to `tol`.
std::vector<double> find_thresholds(const SweepSpec& spec, double tol = 1e-13);

std::string thresholds_csv(const std::vector<double>& thresholds);

}  // namespace fef
