#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fef/bloch.hpp"
#include "fef/types.hpp"

namespace fef {

/// |phi_+><phi_+| on C^d (x) C^d.
DensityMatrix max_entangled(int d);

/// ((1 - theta)/d^2) I + theta |phi_+><phi_+|, -1/(d^2 - 1) <= theta <= 1.
DensityMatrix isotropic(int d, double theta);

/// 3x3 family rho_a, 0 <= a <= 1: the printed 9x9 matrix divided by its
/// trace 8a + 1.
DensityMatrix example1(double a);

/// (8/9) sigma (x) sigma + (1/9)|phi_+><phi_+| with
/// sigma = x|0><0| + (1 - x)|1><1| on C^3, 0 <= x <= 1.
DensityMatrix example2(double x);

/// Projector on sqrt(x)|00> + sqrt(x)|11> + sqrt(1 - 2x)|22>, 0 <= x <= 1/2.
DensityMatrix phi_x(double x);

struct MixtureTerm {
  double weight;
  double x;
};

/// sum_k p_k |phi>_{x_k}<phi|; weights positive and summing to 1 (1e-12).
DensityMatrix phi_mixture(const std::vector<MixtureTerm>& terms);

/// y |phi>_{1/3} + ((1-y)/2) |phi>_{1/2} + ((1-y)/2) |phi>_0, 0 <= y <= 1.
DensityMatrix rho3(double y);

struct RhoZero {
  DensityMatrix state;
  /// Factor in (0, 1] applied to the requested r and s.
  double scale;
};

/// Correlation-free state (1/d^2)(I + sum r_i lambda_i (x) I
/// + sum s_j I (x) lambda_j). The requested (r, s) are shrunk by the largest
/// factor in (0, 1] that keeps the matrix PSD (bisection on the minimum
/// eigenvalue).
RhoZero rho_zero(int d, const RVector& r, const RVector& s);

/// A A^dagger / Tr(A A^dagger), A a d^2 x rank complex Gaussian matrix from
/// the seeded stream.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

/// State families addressable by name from the CLI and state files.
enum class Family {
  MaxEntangled,
  Isotropic,
  Example1,
  Example2,
  PhiX,
  PhiMixture,
  Rho3,
  RhoZero,
  ProductDiag,
  RandomDensity,
};

const char* to_string(Family f);
Family parse_family(const std::string& name);

/// Family plus parameters. Unused fields are ignored by the constructor.
struct StateSpec {
  Family family = Family::MaxEntangled;
  int dim = 3;
  double theta = 0.0;
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
  std::vector<MixtureTerm> terms;
  RVector r;
  RVector s;
  /// ProductDiag: diagonal of the local states p (x) q.
  std::vector<double> p;
  std::vector<double> q;
  int rank = 0;
  std::uint64_t seed = 0;
};

/// diag(p) (x) diag(q) for probability vectors p, q of length d.
DensityMatrix product_diag(const std::vector<double>& p, const std::vector<double>& q);

DensityMatrix build_state(const StateSpec& spec);

}  // namespace fef
