#include "fef/linalg.hpp"

#include <cmath>

namespace fef {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector phi_plus(int d) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s) v(s * d + s) = amp;
  return v;
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const CMatrix gram = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

CMatrix closest_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool all_finite(const RMatrix& m) { return m.allFinite(); }

}  // namespace fef
