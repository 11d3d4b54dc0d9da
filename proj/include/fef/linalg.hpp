#pragma once

#include "fef/types.hpp"

namespace fef {

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// |phi_+> = (1/sqrt d) sum_s |ss>, index a*d + b for |ab>.
CVector phi_plus(int d);

/// ||U^dagger U - I|| in the max-entry norm.
double unitarity_defect(const CMatrix& u);

/// Nearest unitary in Frobenius norm (unitary polar factor).
CMatrix closest_unitary(const CMatrix& m);

/// Largest |m - m^dagger| entry.
double hermiticity_defect(const CMatrix& m);

bool all_finite(const CMatrix& m);
bool all_finite(const RMatrix& m);

}  // namespace fef
