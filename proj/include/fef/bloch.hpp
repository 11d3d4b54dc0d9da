#pragma once

#include <string>

#include "fef/error.hpp"
#include "fef/types.hpp"

namespace fef {

inline constexpr double kDefaultValidationTol = 1e-10;
inline constexpr double kImaginaryResidueTol = 1e-10;

/// A validated state on C^d (x) C^d: Hermitian, unit trace and positive
/// semidefinite, each within the recorded tolerance.
class DensityMatrix {
 public:
  int dim() const noexcept { return d_; }
  const CMatrix& matrix() const noexcept { return data_; }
  double tolerance() const noexcept { return tol_; }

 private:
  DensityMatrix(int d, CMatrix data, double tol)
      : d_(d), data_(std::move(data)), tol_(tol) {}
  friend DensityMatrix validate_density(const CMatrix& m, double tol);

  int d_;
  CMatrix data_;
  double tol_;
};

/// Raised by validate_density for a violated state property.
class ValidationError : public Error {
 public:
  ValidationError(std::string property, double magnitude, double tol);

  /// "hermiticity", "trace" or "positivity".
  const std::string& property() const noexcept { return property_; }
  /// Size of the violation (max |M - M^dagger|, |Tr M - 1|, or -lambda_min).
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string property_;
  double magnitude_;
};

/// Checks shape (side d^2, d >= 2), finiteness, Hermiticity, trace and PSD.
/// The stored matrix is the input unchanged.
DensityMatrix validate_density(const CMatrix& m, double tol = kDefaultValidationTol);

/// Local Bloch vectors and correlation matrix:
///   r_i  = (d/2)   Tr(rho lambda_i (x) I)
///   s_j  = (d/2)   Tr(rho I (x) lambda_j)
///   t_ij = (d^2/4) Tr(rho lambda_i (x) lambda_j)
/// Vectors and matrix are 0-based: r(i-1) holds r_i.
struct BlochDecomposition {
  int dim = 0;
  RVector r;
  RVector s;
  RMatrix t;
};

BlochDecomposition decompose(const DensityMatrix& rho);

/// Inverse map, not required to be PSD:
///   (1/d^2)(I + sum r_i lambda_i (x) I + sum s_j I (x) lambda_j
///           + sum t_ij lambda_i (x) lambda_j)
CMatrix reconstruct(const BlochDecomposition& b);

/// Sum of singular values of t.
double kyfan_norm(const RMatrix& t);

/// Tr(rho^2) from the Bloch coefficients.
double bloch_purity(const BlochDecomposition& b);

}  // namespace fef
