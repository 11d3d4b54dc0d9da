#include "fef/bloch.hpp"

#include <cmath>
#include <sstream>

#include "fef/gellmann.hpp"
#include "fef/linalg.hpp"

namespace fef {
namespace {

std::string describe(const std::string& property, double magnitude, double tol) {
  std::ostringstream os;
  os.precision(6);
  os << property << " violated: magnitude " << magnitude << " exceeds tolerance "
     << tol;
  return os.str();
}

int local_dimension(Eigen::Index side) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(side))));
  return d * d == side ? static_cast<int>(d) : -1;
}

}  // namespace

ValidationError::ValidationError(std::string property, double magnitude, double tol)
    : Error(ErrorCode::Validation, describe(property, magnitude, tol)),
      property_(std::move(property)),
      magnitude_(magnitude) {}

DensityMatrix validate_density(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::Shape, "density matrix must be square, got " +
                                      std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()));
  }
  const int d = local_dimension(m.rows());
  if (d < 2) {
    throw Error(ErrorCode::Shape, "matrix side " + std::to_string(m.rows()) +
                                      " is not d^2 for a local dimension d >= 2");
  }
  if (!all_finite(m)) throw Error(ErrorCode::Numeric, "matrix has non-finite entries");

  const double herm = hermiticity_defect(m);
  if (herm >= tol) throw ValidationError("hermiticity", herm, tol);

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err >= tol) throw ValidationError("trace", trace_err, tol);

  const CMatrix herm_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm_part, Eigen::EigenvaluesOnly);
  const double lowest = eig.eigenvalues().minCoeff();
  if (lowest < -tol) throw ValidationError("positivity", -lowest, tol);

  return DensityMatrix(d, m, tol);
}

BlochDecomposition decompose(const DensityMatrix& rho) {
  const int d = rho.dim();
  const GellMannBasis& gm = cached_basis(d);
  const int n = gm.size();
  const CMatrix& m = rho.matrix();

  // R_i = sum over nonzeros (c, a) of lambda_i: lambda_i(c, a) * P^{(a,c)},
  // with P^{(a,c)}_{b,e} = rho(a d + b, c d + e). Then
  // Tr(rho lambda_i (x) B) = Tr(R_i B).
  std::vector<CMatrix> reduced(n, CMatrix::Zero(d, d));
  for (int i = 1; i <= n; ++i) {
    for (const auto& e : gm.nonzeros(i)) {
      reduced[i - 1] += e.value * m.block(e.col * d, e.row * d, d, d);
    }
  }
  CMatrix rho_b = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) rho_b += m.block(a * d, a * d, d, d);

  auto trace_with = [&](const CMatrix& x, int j) {
    Complex acc{};
    for (const auto& e : gm.nonzeros(j)) acc += x(e.col, e.row) * e.value;
    return acc;
  };
  auto take_real = [](Complex z, const char* what) {
    if (std::abs(z.imag()) > kImaginaryResidueTol) {
      throw Error(ErrorCode::Numeric, std::string("imaginary residue in ") + what +
                                          " coefficient: " + std::to_string(z.imag()));
    }
    return z.real();
  };

  BlochDecomposition b;
  b.dim = d;
  b.r.resize(n);
  b.s.resize(n);
  b.t.resize(n, n);
  const double half_d = d / 2.0;
  const double quarter_d2 = d * d / 4.0;
  for (int i = 1; i <= n; ++i) {
    b.r(i - 1) = take_real(half_d * reduced[i - 1].trace(), "r");
    b.s(i - 1) = take_real(half_d * trace_with(rho_b, i), "s");
    for (int j = 1; j <= n; ++j) {
      b.t(i - 1, j - 1) = take_real(quarter_d2 * trace_with(reduced[i - 1], j), "t");
    }
  }
  return b;
}

CMatrix reconstruct(const BlochDecomposition& b) {
  const int d = b.dim;
  if (d < 2) throw Error(ErrorCode::Shape, "decomposition dimension must be >= 2");
  const int n = d * d - 1;
  if (b.r.size() != n || b.s.size() != n || b.t.rows() != n || b.t.cols() != n) {
    throw Error(ErrorCode::Shape, "Bloch coefficient sizes do not match d^2 - 1 = " +
                                      std::to_string(n));
  }
  const GellMannBasis& gm = cached_basis(d);
  const int side = d * d;
  CMatrix out = CMatrix::Identity(side, side);

  for (int i = 1; i <= n; ++i) {
    for (const auto& e : gm.nonzeros(i)) {
      for (int x = 0; x < d; ++x) {
        out(e.row * d + x, e.col * d + x) += b.r(i - 1) * e.value;
        out(x * d + e.row, x * d + e.col) += b.s(i - 1) * e.value;
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double tij = b.t(i - 1, j - 1);
      if (tij == 0.0) continue;
      for (const auto& ea : gm.nonzeros(i)) {
        for (const auto& eb : gm.nonzeros(j)) {
          out(ea.row * d + eb.row, ea.col * d + eb.col) += tij * ea.value * eb.value;
        }
      }
    }
  }
  return out / static_cast<double>(side);
}

double kyfan_norm(const RMatrix& t) {
  if (!t.allFinite()) throw Error(ErrorCode::Numeric, "matrix has non-finite entries");
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<RMatrix> svd(t);
  return svd.singularValues().sum();
}

double bloch_purity(const BlochDecomposition& b) {
  const double d = b.dim;
  return (1.0 + (2.0 / d) * (b.r.squaredNorm() + b.s.squaredNorm()) +
          (4.0 / (d * d)) * b.t.squaredNorm()) /
         (d * d);
}

}  // namespace fef
