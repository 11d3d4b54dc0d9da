#include "fef/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fef/bounds.hpp"
#include "fef/error.hpp"
#include "fef/linalg.hpp"

namespace fef {
namespace {

constexpr int kReunitarizeEvery = 50;
constexpr double kInitialStep = 0.3;
constexpr double kMaxStep = 0.5;
constexpr int kMaxPatternDoublings = 6;

// Unchecked objective evaluation for the inner loop.
class Objective {
 public:
  explicit Objective(const DensityMatrix& rho)
      : rho_(rho.matrix()), d_(rho.dim()), psi_(rho.dim() * rho.dim()) {}

  double operator()(const CMatrix& u) {
    for (int a = 0; a < d_; ++a) {
      for (int b = 0; b < d_; ++b) psi_(a * d_ + b) = u(a, b);
    }
    return psi_.dot(rho_ * psi_).real() / d_;
  }

 private:
  const CMatrix& rho_;
  int d_;
  CVector psi_;
};

// Coordinate k of the d^2 Hermitian directions: k < d is E_aa, then for each
// pair a < b the real symmetric direction E_ab + E_ba followed by the
// imaginary one -i E_ab + i E_ba.
struct Coordinate {
  enum Kind { Phase, Symmetric, Antisymmetric } kind;
  int a;
  int b;
};

std::vector<Coordinate> coordinates(int d) {
  std::vector<Coordinate> out;
  out.reserve(d * d);
  for (int a = 0; a < d; ++a) out.push_back({Coordinate::Phase, a, a});
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      out.push_back({Coordinate::Symmetric, a, b});
      out.push_back({Coordinate::Antisymmetric, a, b});
    }
  }
  return out;
}

// out = u * exp(i t H_k); only columns a and b change.
void apply_coordinate(const CMatrix& u, const Coordinate& c, double t, CMatrix& out) {
  out = u;
  const double co = std::cos(t);
  const double si = std::sin(t);
  switch (c.kind) {
    case Coordinate::Phase:
      out.col(c.a) *= Complex(co, si);
      break;
    case Coordinate::Symmetric:
      out.col(c.a) = co * u.col(c.a) + Complex(0.0, si) * u.col(c.b);
      out.col(c.b) = Complex(0.0, si) * u.col(c.a) + co * u.col(c.b);
      break;
    case Coordinate::Antisymmetric:
      out.col(c.a) = co * u.col(c.a) - si * u.col(c.b);
      out.col(c.b) = si * u.col(c.a) + co * u.col(c.b);
      break;
  }
}

CMatrix hermitian_from(const std::vector<Coordinate>& coords, const RVector& v, int d) {
  CMatrix h = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Coordinate& c = coords[k];
    const double x = v(static_cast<Eigen::Index>(k));
    switch (c.kind) {
      case Coordinate::Phase:
        h(c.a, c.a) += x;
        break;
      case Coordinate::Symmetric:
        h(c.a, c.b) += x;
        h(c.b, c.a) += x;
        break;
      case Coordinate::Antisymmetric:
        h(c.a, c.b) += Complex(0.0, -x);
        h(c.b, c.a) += Complex(0.0, x);
        break;
    }
  }
  return h;
}

CMatrix exp_i_hermitian(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const RVector& w = eig.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = Complex(std::cos(w(i)), std::sin(w(i)));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

bool improves(double candidate, double current) {
  return candidate > current + 4.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(1.0, std::abs(current));
}

struct LocalResult {
  double value;
  CMatrix unitary;
  long iterations;
  bool converged;
};

LocalResult local_search(const DensityMatrix& rho, CMatrix u, const OptimizerConfig& cfg) {
  const int d = rho.dim();
  Objective objective(rho);
  const std::vector<Coordinate> coords = coordinates(d);
  const auto n = static_cast<Eigen::Index>(coords.size());

  double value = objective(u);
  double step = kInitialStep;
  CMatrix trial(d, d);
  CMatrix best_trial(d, d);
  RVector moved(n);
  long iterations = 0;
  bool converged = false;

  for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
    ++iterations;
    moved.setZero();
    double max_move = 0.0;

    for (Eigen::Index k = 0; k < n; ++k) {
      const Coordinate& c = coords[k];
      apply_coordinate(u, c, step, trial);
      const double f_plus = objective(trial);
      double best = value;
      double best_t = 0.0;
      if (f_plus > best) {
        best = f_plus;
        best_t = step;
        best_trial = trial;
      }
      apply_coordinate(u, c, -step, trial);
      const double f_minus = objective(trial);
      if (f_minus > best) {
        best = f_minus;
        best_t = -step;
        best_trial = trial;
      }
      const double curvature = (f_plus + f_minus - 2.0 * value) / (2.0 * step * step);
      if (curvature < 0.0) {
        const double slope = (f_plus - f_minus) / (2.0 * step);
        const double t = std::clamp(-slope / (2.0 * curvature), -4.0 * step, 4.0 * step);
        if (t != 0.0 && t != step && t != -step) {
          apply_coordinate(u, c, t, trial);
          const double f_t = objective(trial);
          if (f_t > best) {
            best = f_t;
            best_t = t;
            best_trial = trial;
          }
        }
      }
      if (best_t != 0.0 && improves(best, value)) {
        u = best_trial;
        value = best;
        moved(k) = best_t;
        max_move = std::max(max_move, std::abs(best_t));
      }
    }

    if (max_move > 0.0) {
      // Pattern move: keep going along the sweep's net displacement.
      double scale = 1.0;
      for (int tries = 0; tries < kMaxPatternDoublings; ++tries) {
        trial = u * exp_i_hermitian(hermitian_from(coords, scale * moved, d));
        const double f = objective(trial);
        if (!improves(f, value)) break;
        u = trial;
        value = f;
        scale *= 2.0;
      }
    }

    if ((sweep + 1) % kReunitarizeEvery == 0) {
      u = closest_unitary(u);
      value = objective(u);
    }

    if (max_move == 0.0) {
      step *= 0.25;
      if (step < cfg.step_tolerance) {
        converged = true;
        break;
      }
    } else if (max_move < cfg.step_tolerance) {
      converged = true;
      break;
    } else {
      step = std::clamp(2.0 * max_move, cfg.step_tolerance, kMaxStep);
    }
  }

  u = closest_unitary(u);
  return {fef_objective(rho, u), std::move(u), iterations, converged};
}

void check_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iterations < 1 || !(cfg.step_tolerance > 0.0) ||
      !(cfg.objective_tolerance > 0.0)) {
    throw Error(ErrorCode::Range,
                "optimizer config needs restarts >= 1, max_iterations >= 1 and "
                "positive tolerances");
  }
}

}  // namespace

CMatrix haar_unitary(int d, Rng& rng) {
  if (d < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2");
  const CMatrix z = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    q.col(i) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

OptimizationResult maximize_fef(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  check_config(cfg);
  const int d = rho.dim();

  std::vector<double> finals;
  finals.reserve(cfg.restarts);
  OptimizationResult result;
  result.best_value = -std::numeric_limits<double>::infinity();

  for (int k = 0; k < cfg.restarts; ++k) {
    CMatrix start;
    if (k == 0) {
      start = CMatrix::Identity(d, d);
    } else {
      Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(k)));
      start = haar_unitary(d, rng);
    }
    LocalResult local = local_search(rho, std::move(start), cfg);
    result.iterations_total += local.iterations;
    result.converged = result.converged || local.converged;
    finals.push_back(local.value);
    if (local.value > result.best_value) {
      result.best_value = local.value;
      result.best_unitary = std::move(local.unitary);
      result.best_restart = k;
    }
  }
  result.restarts_agreeing = static_cast<int>(std::count_if(
      finals.begin(), finals.end(), [&](double v) {
        return v >= result.best_value - cfg.objective_tolerance;
      }));
  return result;
}

}  // namespace fef
