#pragma once

#include <functional>

#include "doctest.h"

#include "fef/error.hpp"
#include "fef/types.hpp"

namespace testing {

inline fef::ErrorCode error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const fef::Error& e) {
    return e.code();
  }
  FAIL("expected fef::Error");
  return fef::ErrorCode::Usage;
}

inline double max_abs(const fef::CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Plain loop Kronecker product, independent of the library's helper.
inline fef::CMatrix tensor(const fef::CMatrix& a, const fef::CMatrix& b) {
  fef::CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline fef::CMatrix ket_bra(const fef::CVector& v) { return v * v.adjoint(); }

// Pauli matrices in the order z, x, y.
inline fef::CMatrix pauli(int k) {
  fef::CMatrix m = fef::CMatrix::Zero(2, 2);
  const fef::Complex i(0.0, 1.0);
  if (k == 0) m << 1, 0, 0, -1;
  if (k == 1) m << 0, 1, 1, 0;
  if (k == 2) m << 0, -i, i, 0;
  return m;
}

}  // namespace testing
