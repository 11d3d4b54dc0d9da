#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fef/types.hpp"

namespace fef {

/// Generator classes: diagonal (omega_m), symmetric off-diagonal (u_lk) and
/// antisymmetric off-diagonal (v_lk).
enum class GeneratorClass { Omega1, Omega2, Omega3 };

struct IndexClass {
  GeneratorClass cls;
  /// (l, k) with l < k; set for Omega2 and Omega3.
  std::optional<std::pair<int, int>> pair;
  /// m = i - 1; set for Omega1.
  std::optional<int> omega_index;
};

/// One nonzero entry of a generator, used for sparse contractions.
struct GeneratorEntry {
  int row;
  int col;
  Complex value;
};

/// Ordered SU(d) generator basis lambda_1 .. lambda_{d^2-1}.
///
/// Indices are 1-based throughout this interface:
///   Omega1 = {1, ..., d-1}                  lambda_i = omega_{i-1}
///   Omega2 = {d, ..., (d-1)(d+2)/2}         lambda_i = u_lk
///   Omega3 = {d(d+1)/2, ..., d^2-1}         lambda_i = v_lk
/// with the pairs (l, k) of Omega2 and Omega3 in lexicographic order. Row and
/// column i of a correlation matrix T live at 0-based position i - 1.
///
/// Normalization is Tr(lambda_i lambda_j) = 2 delta_ij. Immutable.
class GellMannBasis {
 public:
  explicit GellMannBasis(int d);

  int dim() const noexcept { return d_; }
  /// Number of generators, d^2 - 1.
  int size() const noexcept { return d_ * d_ - 1; }

  const CMatrix& generator(int i) const;
  const IndexClass& index_class(int i) const;
  GeneratorClass class_of(int i) const { return index_class(i).cls; }
  std::span<const GeneratorEntry> nonzeros(int i) const;

  /// +1 for Omega1 and Omega2, -1 for Omega3; lambda_i^T = sign(i) lambda_i.
  double transpose_sign(int i) const {
    return class_of(i) == GeneratorClass::Omega3 ? -1.0 : 1.0;
  }

 private:
  void check_index(int i) const;

  int d_;
  std::vector<CMatrix> generators_;
  std::vector<IndexClass> classes_;
  std::vector<std::vector<GeneratorEntry>> nonzeros_;
};

/// Builds the basis; throws Error(InvalidDimension) for d < 2.
GellMannBasis basis(int d);

/// Shared immutable instance per dimension (built on first use).
const GellMannBasis& cached_basis(int d);

IndexClass index_class(int d, int i);

/// 1-based generator index of the pair (l, k) within Omega2 or Omega3.
int pair_index(int d, GeneratorClass cls, int l, int k);

/// Closed-form eigenvalues of lambda_i, ascending.
std::vector<double> generator_spectrum(int d, int i);

}  // namespace fef
