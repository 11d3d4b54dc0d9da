#include "fef/sweep.hpp"

#include <cmath>
#include <sstream>

#include "fef/bounds.hpp"
#include "fef/error.hpp"
#include "fef/io.hpp"
#include "fef/report.hpp"

namespace fef {
namespace {

double usefulness_gap(Family family, int dim, double param) {
  const BlochDecomposition b = decompose(sweep_state(family, dim, param));
  return singlet_fraction(b) - 1.0 / b.dim;
}

}  // namespace

std::pair<double, double> sweep_domain(Family family, int dim) {
  switch (family) {
    case Family::Example1:
    case Family::Example2:
    case Family::Rho3:
      return {0.0, 1.0};
    case Family::PhiX:
      return {0.0, 0.5};
    case Family::Isotropic: {
      if (dim < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2");
      const double d2 = static_cast<double>(dim) * dim;
      return {-1.0 / (d2 - 1.0), 1.0};
    }
    default:
      throw Error(ErrorCode::Usage, std::string("family '") + to_string(family) +
                                        "' cannot be swept; use example1, example2, "
                                        "phix, rho3 or isotropic");
  }
}

DensityMatrix sweep_state(Family family, int dim, double param) {
  switch (family) {
    case Family::Example1: return example1(param);
    case Family::Example2: return example2(param);
    case Family::PhiX: return phi_x(param);
    case Family::Rho3: return rho3(param);
    case Family::Isotropic: return isotropic(dim, param);
    default: sweep_domain(family, dim);  // throws
  }
  throw Error(ErrorCode::Usage, "unsupported sweep family");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  const auto [lo, hi] = sweep_domain(spec.family, spec.dim);
  if (!(spec.from >= lo && spec.to <= hi && spec.from <= spec.to)) {
    std::ostringstream os;
    os.precision(17);
    os << "sweep range [" << spec.from << ", " << spec.to << "] outside domain [" << lo
       << ", " << hi << "] of " << to_string(spec.family);
    throw Error(ErrorCode::Range, os.str());
  }
  if (spec.steps < 1 || (spec.steps == 1 && spec.from != spec.to)) {
    throw Error(ErrorCode::Range, "steps must be >= 2 (or 1 with from == to)");
  }
  std::vector<double> grid(spec.steps);
  for (int k = 0; k < spec.steps; ++k) {
    grid[k] = k + 1 == spec.steps
                  ? spec.to
                  : spec.from + (spec.to - spec.from) * k / (spec.steps - 1.0);
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const std::vector<double> grid = sweep_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::optional<OptimizerConfig> cfg = spec.optimizer;
    if (cfg) cfg->seed = split_seed(spec.optimizer->seed, k);
    const BoundReport rep = full_report(sweep_state(spec.family, spec.dim, grid[k]), cfg);
    rows.push_back({grid[k], rep.singlet_fraction, rep.thm1_bound, rep.cor1_bound,
                    rep.prior_bound, rep.numeric_fef, rep.exact_fef()});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = kSweepHeader;
  out += '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const SweepRow& r : rows) {
    out += format_double(r.param) + ',' + format_double(r.f) + ',' + format_double(r.thm1) +
           ',' + format_double(r.cor1) + ',' + format_double(r.prior) + ',' +
           opt(r.fef_numeric) + ',' + opt(r.fef_exact) + '\n';
  }
  return out;
}

std::vector<double> find_thresholds(const SweepSpec& spec, double tol) {
  const std::vector<double> grid = sweep_grid(spec);
  std::vector<double> gaps(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    gaps[k] = usefulness_gap(spec.family, spec.dim, grid[k]);
  }
  std::vector<double> roots;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (gaps[k] == 0.0) {
      roots.push_back(grid[k]);
      continue;
    }
    if (k + 1 == grid.size() || gaps[k + 1] == 0.0 || (gaps[k] > 0.0) == (gaps[k + 1] > 0.0)) {
      continue;
    }
    double lo = grid[k];
    double hi = grid[k + 1];
    const bool lo_positive = gaps[k] > 0.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      ((usefulness_gap(spec.family, spec.dim, mid) > 0.0) == lo_positive ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

std::string thresholds_csv(const std::vector<double>& thresholds) {
  std::string out = "threshold\n";
  for (double t : thresholds) out += format_double(t) + '\n';
  return out;
}

}  // namespace fef
