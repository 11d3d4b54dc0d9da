#pragma once

#include <optional>

#include "fef/bloch.hpp"
#include "fef/types.hpp"

namespace fef {

inline constexpr double kUnitarityTol = 1e-8;
inline constexpr double kExactConditionTol = 1e-10;

/// <phi_+| (U^dagger (x) I) rho (U (x) I) |phi_+> for one unitary U.
double fef_objective(const DensityMatrix& rho, const CMatrix& u);

/// Same quantity from Bloch coefficients:
///   1/d^2 + (1/d^3) sum_ij sigma_j t_ij Tr(U^dagger lambda_i U lambda_j),
/// sigma_j = -1 on Omega3 and +1 elsewhere.
double fef_bloch_objective(const BlochDecomposition& b, const CMatrix& u);

/// Delta(U, i, j) = Tr(U^dagger lambda_i U lambda_j) for all pairs; entry
/// (i-1, j-1).
RMatrix delta_matrix(int d, const CMatrix& u);

/// f(rho) = <phi_+|rho|phi_+> via the diagonal of T.
double singlet_fraction(const BlochDecomposition& b);

/// Sum_{i in Omega1 u Omega2} t_ii - Sum_{i in Omega3} t_ii.
double signed_diagonal_sum(const BlochDecomposition& b);

struct BoundBreakdown {
  double t1 = 0.0;  // Omega1 x Omega1
  double t2 = 0.0;  // Omega1 x (Omega2 u Omega3)
  double t3 = 0.0;  // (Omega2 u Omega3) x Omega1
  double t4 = 0.0;  // (Omega2 u Omega3) x (Omega2 u Omega3)

  double total() const { return t1 + t2 + t3 + t4; }
};

struct WeightedBound {
  double value;
  BoundBreakdown terms;
};

/// 1/d^2 + (T1 + T2 + T3 + T4)/d^3 with class-dependent weights on |t_ij|.
WeightedBound upper_bound_thm1(const BlochDecomposition& b);

/// 1/d^2 + (2/d^3) sum |t_ij|.
double upper_bound_cor1(const BlochDecomposition& b);

/// 1/d^2 + 4 ||M(rho)^T M(Phi_+)||_KF with M = T/d^2.
double upper_bound_prior(const BlochDecomposition& b);

/// (d + 2 ||T||_KF)/d^3 when T is diagonal with t_ii >= 0 on Omega1 u Omega2
/// and t_ii <= 0 on Omega3 (all within tol); absent otherwise.
std::optional<double> exact_fef_thm3(const BlochDecomposition& b,
                                     double tol = kExactConditionTol);

/// (1 + ||T||_KF)/4. Exact for two-qubit states with det T <= 0 only; see
/// fef_two_qubit_exact.
double fef_two_qubit(const BlochDecomposition& b);

/// (1 + s1 + s2 - sgn(det T) s3)/4 with s1 >= s2 >= s3 the singular values
/// of T. The sign flip on lambda_3 = sigma_y restricts the reachable
/// rotations to det = -1, so the smallest singular value enters with a minus
/// sign whenever det T > 0. Equals fef_two_qubit when det T <= 0.
double fef_two_qubit_exact(const BlochDecomposition& b);

struct DeltaBound {
  double lo;
  double hi;
};

/// Envelope [lo, hi] containing Delta(U, i, j) for every unitary U.
DeltaBound delta_bound(int d, int i, int j);

/// Teleportation fidelity (dF + 1)/(d + 1).
double optimal_fidelity(double fef, int d);

enum class Usefulness { Yes, No, Undetermined };

const char* to_string(Usefulness u);

/// Yes when the signed diagonal sum exceeds d(d-1)/2, No when an upper bound
/// is already <= 1/d, Undetermined otherwise.
Usefulness useful_for_teleportation(const BlochDecomposition& b);

/// theta > 1/(d + 1), for -1/(d^2 - 1) <= theta <= 1.
bool distillable_isotropic(double theta, int d);

}  // namespace fef
