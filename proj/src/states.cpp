#include "fef/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fef/error.hpp"
#include "fef/gellmann.hpp"
#include "fef/linalg.hpp"
#include "fef/rng.hpp"

namespace fef {
namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_dim(int d) {
  require(d >= 2, ErrorCode::InvalidDimension, "dimension must be >= 2");
}

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

CVector phi_x_vector(double x) {
  CVector v = CVector::Zero(9);
  v(0) = std::sqrt(x);
  v(4) = std::sqrt(x);
  v(8) = std::sqrt(std::max(0.0, 1.0 - 2.0 * x));
  return v;
}

void check_phi_x(double x) {
  require(x >= 0.0 && x <= 0.5, ErrorCode::Range, "x = " + fmt(x) + " outside [0, 1/2]");
}

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix max_entangled(int d) {
  check_dim(d);
  return validate_density(projector(phi_plus(d)));
}

DensityMatrix isotropic(int d, double theta) {
  check_dim(d);
  const double d2 = static_cast<double>(d) * d;
  require(theta >= -1.0 / (d2 - 1.0) && theta <= 1.0, ErrorCode::Range,
          "theta = " + fmt(theta) + " outside [-1/(d^2-1), 1]");
  const int side = d * d;
  const CMatrix m = (1.0 - theta) / d2 * CMatrix::Identity(side, side) +
                    theta * projector(phi_plus(d));
  return validate_density(m);
}

DensityMatrix example1(double a) {
  require(a >= 0.0 && a <= 1.0, ErrorCode::Range, "a = " + fmt(a) + " outside [0, 1]");
  CMatrix m = CMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) m(i, i) = a;
  for (int i : {0, 4, 8}) {
    for (int j : {0, 4, 8}) m(i, j) = a;
  }
  const double corner = std::sqrt(std::max(0.0, 1.0 - a * a)) / 2.0;
  m(6, 6) = (1.0 + a) / 2.0;
  m(8, 8) = (1.0 + a) / 2.0;
  m(6, 8) = corner;
  m(8, 6) = corner;
  return validate_density(m / m.trace().real());
}

DensityMatrix example2(double x) {
  require(x >= 0.0 && x <= 1.0, ErrorCode::Range, "x = " + fmt(x) + " outside [0, 1]");
  CMatrix sigma = CMatrix::Zero(3, 3);
  sigma(0, 0) = x;
  sigma(1, 1) = 1.0 - x;
  const CMatrix m = (8.0 / 9.0) * kron(sigma, sigma) + (1.0 / 9.0) * projector(phi_plus(3));
  return validate_density(m);
}

DensityMatrix phi_x(double x) {
  check_phi_x(x);
  return validate_density(projector(phi_x_vector(x)));
}

DensityMatrix phi_mixture(const std::vector<MixtureTerm>& terms) {
  require(!terms.empty(), ErrorCode::Range, "mixture needs at least one term");
  double total = 0.0;
  CMatrix m = CMatrix::Zero(9, 9);
  for (const MixtureTerm& term : terms) {
    require(term.weight > 0.0, ErrorCode::Range,
            "mixture weight " + fmt(term.weight) + " is not positive");
    check_phi_x(term.x);
    total += term.weight;
    m += term.weight * projector(phi_x_vector(term.x));
  }
  require(std::abs(total - 1.0) <= 1e-12, ErrorCode::Range,
          "mixture weights sum to " + fmt(total) + ", expected 1");
  return validate_density(m);
}

DensityMatrix rho3(double y) {
  require(y >= 0.0 && y <= 1.0, ErrorCode::Range, "y = " + fmt(y) + " outside [0, 1]");
  // Zero-weight terms are dropped; the mixture requires p_k > 0.
  std::vector<MixtureTerm> terms;
  if (y > 0.0) terms.push_back({y, 1.0 / 3.0});
  if (y < 1.0) {
    terms.push_back({(1.0 - y) / 2.0, 0.5});
    terms.push_back({(1.0 - y) / 2.0, 0.0});
  }
  return phi_mixture(terms);
}

RhoZero rho_zero(int d, const RVector& r, const RVector& s) {
  check_dim(d);
  const int n = d * d - 1;
  require(r.size() == n && s.size() == n, ErrorCode::Shape,
          "local vectors must have length d^2 - 1 = " + std::to_string(n));
  require(r.allFinite() && s.allFinite(), ErrorCode::Construction,
          "local vectors contain non-finite entries");

  BlochDecomposition b;
  b.dim = d;
  b.t = RMatrix::Zero(n, n);
  auto build = [&](double scale) {
    b.r = scale * r;
    b.s = scale * s;
    return reconstruct(b);
  };

  double scale = 1.0;
  CMatrix m = build(scale);
  if (min_eigenvalue(m) < 0.0) {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (min_eigenvalue(build(mid)) >= 0.0 ? lo : hi) = mid;
    }
    scale = lo;
    m = build(scale);
  }
  require(scale > 0.0 || (r.isZero(0.0) && s.isZero(0.0)), ErrorCode::Construction,
          "no positive scale keeps the correlation-free state PSD");
  try {
    return {validate_density(m), scale};
  } catch (const Error& e) {
    throw Error(ErrorCode::Construction, std::string("rho_zero: ") + e.what());
  }
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  check_dim(d);
  require(rank >= 1 && rank <= d * d, ErrorCode::Range,
          "rank " + std::to_string(rank) + " outside [1, d^2]");
  Rng rng(seed);
  const CMatrix a = ginibre(d * d, rank, rng);
  CMatrix m = a * a.adjoint();
  m /= m.trace().real();
  // Remove rounding asymmetry so the stored matrix is exactly Hermitian.
  m = 0.5 * (m + m.adjoint()).eval();
  return validate_density(m);
}

DensityMatrix product_diag(const std::vector<double>& p, const std::vector<double>& q) {
  require(p.size() == q.size() && p.size() >= 2, ErrorCode::Shape,
          "product_diag needs two probability vectors of equal length d >= 2");
  CMatrix m = CMatrix::Zero(p.size() * q.size(), p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) m(i * q.size() + j, i * q.size() + j) = p[i] * q[j];
  }
  return validate_density(m);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::MaxEntangled: return "maxent";
    case Family::Isotropic: return "isotropic";
    case Family::Example1: return "example1";
    case Family::Example2: return "example2";
    case Family::PhiX: return "phix";
    case Family::PhiMixture: return "phimixture";
    case Family::Rho3: return "rho3";
    case Family::RhoZero: return "rho0";
    case Family::ProductDiag: return "productdiag";
    case Family::RandomDensity: return "random";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::MaxEntangled, Family::Isotropic, Family::Example1,
                   Family::Example2, Family::PhiX, Family::PhiMixture, Family::Rho3,
                   Family::RhoZero, Family::ProductDiag, Family::RandomDensity}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::Parse, "unknown state family '" + name + "'");
}

DensityMatrix build_state(const StateSpec& spec) {
  switch (spec.family) {
    case Family::MaxEntangled: return max_entangled(spec.dim);
    case Family::Isotropic: return isotropic(spec.dim, spec.theta);
    case Family::Example1: return example1(spec.a);
    case Family::Example2: return example2(spec.x);
    case Family::PhiX: return phi_x(spec.x);
    case Family::PhiMixture: return phi_mixture(spec.terms);
    case Family::Rho3: return rho3(spec.y);
    case Family::RhoZero: {
      const int n = spec.dim * spec.dim - 1;
      const RVector r = spec.r.size() == 0 ? RVector::Zero(n) : spec.r;
      const RVector s = spec.s.size() == 0 ? RVector::Zero(n) : spec.s;
      return rho_zero(spec.dim, r, s).state;
    }
    case Family::ProductDiag: return product_diag(spec.p, spec.q);
    case Family::RandomDensity:
      return random_density(spec.dim, spec.rank > 0 ? spec.rank : spec.dim * spec.dim,
                            spec.seed);
  }
  throw Error(ErrorCode::Parse, "unhandled state family");
}

}  // namespace fef
