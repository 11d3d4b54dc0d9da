#include "fef/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "fef/error.hpp"
#include "fef/gellmann.hpp"
#include "fef/linalg.hpp"

namespace fef {
namespace {

bool in_omega1(int d, int i) { return i <= d - 1; }

void check_unitary(int d, const CMatrix& u) {
  if (u.rows() != d || u.cols() != d) {
    throw Error(ErrorCode::Shape, "unitary must be " + std::to_string(d) + "x" +
                                      std::to_string(d));
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitarityTol)) {
    throw Error(ErrorCode::Precondition,
                "matrix is not unitary: ||U^dagger U - I|| = " + std::to_string(defect));
  }
}

void check_decomposition(const BlochDecomposition& b) {
  const int n = b.dim * b.dim - 1;
  if (b.dim < 2 || b.t.rows() != n || b.t.cols() != n) {
    throw Error(ErrorCode::Shape, "correlation matrix does not match dimension");
  }
}

// Diagonal correlation matrix of |phi_+><phi_+|: t_ii = sigma_i d/2.
const RMatrix& max_entangled_correlations(int d) {
  static std::mutex mutex;
  static std::map<int, RMatrix> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    const CVector phi = phi_plus(d);
    const DensityMatrix rho = validate_density(phi * phi.adjoint());
    it = cache.emplace(d, decompose(rho).t).first;
  }
  return it->second;
}

double omega1_pair_scale(int i, int j) {
  return std::sqrt(static_cast<double>(i) * j * (i + 1.0) * (j + 1.0));
}

}  // namespace

double fef_objective(const DensityMatrix& rho, const CMatrix& u) {
  const int d = rho.dim();
  check_unitary(d, u);
  CVector psi(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) psi(a * d + b) = u(a, b) * scale;
  }
  return psi.dot(rho.matrix() * psi).real();
}

RMatrix delta_matrix(int d, const CMatrix& u) {
  const GellMannBasis& gm = cached_basis(d);
  const int n = gm.size();
  RMatrix delta(n, n);
  for (int i = 1; i <= n; ++i) {
    const CMatrix rotated = u.adjoint() * gm.generator(i) * u;
    for (int j = 1; j <= n; ++j) {
      Complex acc{};
      for (const auto& e : gm.nonzeros(j)) acc += rotated(e.col, e.row) * e.value;
      delta(i - 1, j - 1) = acc.real();
    }
  }
  return delta;
}

double fef_bloch_objective(const BlochDecomposition& b, const CMatrix& u) {
  check_decomposition(b);
  const int d = b.dim;
  check_unitary(d, u);
  const GellMannBasis& gm = cached_basis(d);
  const RMatrix delta = delta_matrix(d, u);
  double acc = 0.0;
  for (int j = 1; j <= gm.size(); ++j) {
    acc += gm.transpose_sign(j) * b.t.col(j - 1).dot(delta.col(j - 1));
  }
  const double dd = d;
  return 1.0 / (dd * dd) + acc / (dd * dd * dd);
}

double signed_diagonal_sum(const BlochDecomposition& b) {
  check_decomposition(b);
  const GellMannBasis& gm = cached_basis(b.dim);
  double acc = 0.0;
  for (int i = 1; i <= gm.size(); ++i) acc += gm.transpose_sign(i) * b.t(i - 1, i - 1);
  return acc;
}

double singlet_fraction(const BlochDecomposition& b) {
  const double d = b.dim;
  return 1.0 / (d * d) + 2.0 / (d * d * d) * signed_diagonal_sum(b);
}

WeightedBound upper_bound_thm1(const BlochDecomposition& b) {
  check_decomposition(b);
  const int d = b.dim;
  const int n = d * d - 1;
  BoundBreakdown terms;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double mag = std::abs(b.t(i - 1, j - 1));
      if (mag == 0.0) continue;
      const bool diag_i = in_omega1(d, i);
      const bool diag_j = in_omega1(d, j);
      if (diag_i && diag_j) {
        terms.t1 += 2.0 * (i * j + std::min(i, j)) / omega1_pair_scale(i, j) * mag;
      } else if (diag_i) {
        terms.t2 += std::sqrt(2.0 * (i + 1.0) / i) * mag;
      } else if (diag_j) {
        terms.t3 += std::sqrt(2.0 * (j + 1.0) / j) * mag;
      } else {
        terms.t4 += 2.0 * mag;
      }
    }
  }
  const double dd = d;
  return {1.0 / (dd * dd) + terms.total() / (dd * dd * dd), terms};
}

double upper_bound_cor1(const BlochDecomposition& b) {
  check_decomposition(b);
  const double d = b.dim;
  return 1.0 / (d * d) + 2.0 / (d * d * d) * b.t.cwiseAbs().sum();
}

double upper_bound_prior(const BlochDecomposition& b) {
  check_decomposition(b);
  const int d = b.dim;
  const double d2 = static_cast<double>(d) * d;
  const RMatrix m_rho = b.t / d2;
  const RMatrix m_phi = max_entangled_correlations(d) / d2;
  return 1.0 / d2 + 4.0 * kyfan_norm(m_rho.transpose() * m_phi);
}

std::optional<double> exact_fef_thm3(const BlochDecomposition& b, double tol) {
  check_decomposition(b);
  const int d = b.dim;
  const GellMannBasis& gm = cached_basis(d);
  const int n = gm.size();
  for (int i = 1; i <= n; ++i) {
    const double tii = b.t(i - 1, i - 1);
    if (gm.class_of(i) == GeneratorClass::Omega3) {
      if (tii > tol) return std::nullopt;
    } else if (tii < -tol) {
      return std::nullopt;
    }
    for (int j = 1; j <= n; ++j) {
      if (i != j && std::abs(b.t(i - 1, j - 1)) > tol) return std::nullopt;
    }
  }
  const double dd = d;
  return (dd + 2.0 * kyfan_norm(b.t)) / (dd * dd * dd);
}

double fef_two_qubit(const BlochDecomposition& b) {
  if (b.dim != 2) {
    throw Error(ErrorCode::InvalidDimension,
                "two-qubit formula needs d = 2, got " + std::to_string(b.dim));
  }
  check_decomposition(b);
  return (1.0 + kyfan_norm(b.t)) / 4.0;
}

double fef_two_qubit_exact(const BlochDecomposition& b) {
  if (b.dim != 2) {
    throw Error(ErrorCode::InvalidDimension,
                "two-qubit formula needs d = 2, got " + std::to_string(b.dim));
  }
  check_decomposition(b);
  if (!b.t.allFinite()) throw Error(ErrorCode::Numeric, "matrix has non-finite entries");
  Eigen::JacobiSVD<RMatrix> svd(b.t);
  const RVector s = svd.singularValues();  // descending
  const double smallest = b.t.determinant() > 0.0 ? -s(2) : s(2);
  return (1.0 + s(0) + s(1) + smallest) / 4.0;
}

DeltaBound delta_bound(int d, int i, int j) {
  const int n = d * d - 1;
  if (d < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorCode::Index, "generator index pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") out of range");
  }
  const bool diag_i = in_omega1(d, i);
  const bool diag_j = in_omega1(d, j);
  if (diag_i && diag_j) {
    const double scale = omega1_pair_scale(i, j);
    const double hi = 2.0 * (i * j + std::min(i, j)) / scale;
    const double lo = i + j < d + 1 ? -2.0 * (i + j) / scale : -2.0 * d / scale;
    return {lo, hi};
  }
  if (diag_i || diag_j) {
    const int m = diag_i ? i : j;
    const double w = std::sqrt(2.0 * (m + 1.0) / m);
    return {-w, w};
  }
  return {-2.0, 2.0};
}

double optimal_fidelity(double fef, int d) {
  if (d < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2");
  if (!(fef >= -1e-9 && fef <= 1.0 + 1e-9)) {
    throw Error(ErrorCode::Range, "FEF value " + std::to_string(fef) + " outside [0, 1]");
  }
  return (d * fef + 1.0) / (d + 1.0);
}

const char* to_string(Usefulness u) {
  switch (u) {
    case Usefulness::Yes: return "yes";
    case Usefulness::No: return "no";
    case Usefulness::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Usefulness useful_for_teleportation(const BlochDecomposition& b) {
  const double d = b.dim;
  if (signed_diagonal_sum(b) > d * (d - 1.0) / 2.0) return Usefulness::Yes;
  const double upper = std::min(upper_bound_thm1(b).value, upper_bound_cor1(b));
  if (upper <= 1.0 / d) return Usefulness::No;
  return Usefulness::Undetermined;
}

bool distillable_isotropic(double theta, int d) {
  if (d < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 2");
  const double lower = -1.0 / (static_cast<double>(d) * d - 1.0);
  if (!(theta >= lower && theta <= 1.0)) {
    throw Error(ErrorCode::Range, "theta " + std::to_string(theta) +
                                      " outside the isotropic range [" +
                                      std::to_string(lower) + ", 1]");
  }
  return theta > 1.0 / (d + 1.0);
}

}  // namespace fef
