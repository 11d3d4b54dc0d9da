#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "fef/bounds.hpp"
#include "fef/rng.hpp"
#include "fef/states.hpp"

using namespace fef;
using testing::error_code_of;
using testing::max_abs;

namespace {

double min_eig(const CMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

}  // namespace

TEST_CASE("max_entangled") {
  const CMatrix m2 = max_entangled(2).matrix();
  CMatrix expected = CMatrix::Zero(4, 4);
  for (int i : {0, 3})
    for (int j : {0, 3}) expected(i, j) = 0.5;
  CHECK(max_abs(m2 - expected) < 1e-15);

  const auto m3 = max_entangled(3);
  CHECK(m3.matrix().trace().real() == doctest::Approx(1.0));
  CHECK(purity(m3) == doctest::Approx(1.0));
  CHECK(singlet_fraction(decompose(m3)) == doctest::Approx(1.0));
  CHECK(error_code_of([] { max_entangled(1); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("isotropic") {
  CHECK(max_abs(isotropic(3, 0.0).matrix() - CMatrix::Identity(9, 9) / 9.0) < 1e-16);
  CHECK(max_abs(isotropic(3, 1.0).matrix() - max_entangled(3).matrix()) < 1e-15);
  CHECK(singlet_fraction(decompose(isotropic(3, 0.5))) == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
  CHECK(error_code_of([] { isotropic(3, 1.01); }) == ErrorCode::Range);
  CHECK(error_code_of([] { isotropic(3, -0.2); }) == ErrorCode::Range);
  CHECK_NOTHROW(isotropic(3, -1.0 / 8.0));
}

TEST_CASE("example1") {
  CHECK(singlet_fraction(decompose(example1(1.0))) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(singlet_fraction(decompose(example1(0.0))) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  for (int k = 0; k < 50; ++k) {
    const auto rho = example1(k / 49.0);
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    CHECK(min_eig(rho.matrix()) > -1e-12);
  }
  CHECK(error_code_of([] { example1(1.5); }) == ErrorCode::Range);
}

TEST_CASE("example2") {
  for (double x : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const double expected = 8.0 / 27.0 * (x * x + (1 - x) * (1 - x)) + 1.0 / 9.0;
    CHECK(std::abs(singlet_fraction(decompose(example2(x))) - expected) < 1e-13);
  }
  CHECK(singlet_fraction(decompose(example2(0.0))) == doctest::Approx(11.0 / 27.0));
  CHECK(singlet_fraction(decompose(example2(0.5))) == doctest::Approx(7.0 / 27.0));
  const double edge = (2 - std::sqrt(2.0)) / 4;
  CHECK(singlet_fraction(decompose(example2(edge))) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(error_code_of([] { example2(-0.1); }) == ErrorCode::Range);
}

TEST_CASE("phi_x") {
  CHECK(max_abs(phi_x(1.0 / 3.0).matrix() - max_entangled(3).matrix()) < 1e-15);
  CMatrix corner = CMatrix::Zero(9, 9);
  corner(8, 8) = 1.0;
  CHECK(max_abs(phi_x(0.0).matrix() - corner) < 1e-16);
  CHECK(*exact_fef_thm3(decompose(phi_x(0.0))) == doctest::Approx(1.0 / 3.0));
  CHECK(*exact_fef_thm3(decompose(phi_x(0.5))) == doctest::Approx(2.0 / 3.0));
  CHECK(purity(phi_x(0.2)) == doctest::Approx(1.0));
  CHECK(error_code_of([] { phi_x(0.6); }) == ErrorCode::Range);
}

TEST_CASE("phi_mixture") {
  CHECK(max_abs(phi_mixture({{1.0, 0.2}}).matrix() - phi_x(0.2).matrix()) < 1e-15);
  CHECK(error_code_of([] { phi_mixture({{0.5, 0.1}, {0.4, 0.2}}); }) == ErrorCode::Range);
  CHECK(error_code_of([] { phi_mixture({{1.0, 0.1}, {0.0, 0.2}}); }) == ErrorCode::Range);
  CHECK(error_code_of([] { phi_mixture({}); }) == ErrorCode::Range);

  for (double y : {0.0, 0.4, 1.0}) {
    const auto value = exact_fef_thm3(decompose(rho3(y)));
    REQUIRE(value.has_value());
    CHECK(std::abs(*value - (1 + y) / 2) < 1e-12);
  }
  const auto some = exact_fef_thm3(decompose(phi_mixture({{0.9, 0.0}, {0.1, 0.01}})));
  REQUIRE(some.has_value());
  CHECK(*some > 1.0 / 3.0);
}

TEST_CASE("property: mixture correlation matrix is linear in the weights") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MixtureTerm> terms;
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      terms.push_back({0.1 + rng.uniform(), 0.5 * rng.uniform()});
      total += terms.back().weight;
    }
    for (auto& t : terms) t.weight /= total;
    double sum = 0.0;
    for (const auto& t : terms) sum += t.weight;
    terms.back().weight += 1.0 - sum;
    RMatrix expected = RMatrix::Zero(8, 8);
    for (const auto& t : terms) expected += t.weight * decompose(phi_x(t.x)).t;
    CHECK((decompose(phi_mixture(terms)).t - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("rho_zero") {
  const auto trivial = rho_zero(3, RVector::Zero(8), RVector::Zero(8));
  CHECK(max_abs(trivial.state.matrix() - CMatrix::Identity(9, 9) / 9.0) < 1e-16);

  Rng rng(12);
  for (int d = 2; d <= 3; ++d) {
    const int n = d * d - 1;
    RVector r(n), s(n);
    for (int i = 0; i < n; ++i) {
      r(i) = rng.normal();
      s(i) = rng.normal();
    }
    const auto z = rho_zero(d, r, s);
    CHECK(z.scale > 0.0);
    CHECK(z.scale <= 1.0);
    const auto b = decompose(z.state);
    CHECK(b.t.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(min_eig(z.state.matrix()) > -1e-10);
  }
  CHECK(error_code_of([] { rho_zero(2, RVector::Zero(2), RVector::Zero(3)); }) == ErrorCode::Shape);
}

TEST_CASE("random_density") {
  const auto pure = random_density(3, 1, 5);
  CHECK(std::abs(purity(pure) - 1.0) < 1e-10);

  const auto full = random_density(2, 4, 5);
  CHECK(min_eig(full.matrix()) > 1e-8);

  CHECK(max_abs(random_density(2, 4, 42).matrix() - random_density(2, 4, 42).matrix()) == 0.0);
  CHECK(max_abs(random_density(2, 4, 42).matrix() - random_density(2, 4, 43).matrix()) > 1e-3);
  CHECK(error_code_of([] { random_density(2, 5, 1); }) == ErrorCode::Range);
}

TEST_CASE("product_diag") {
  const auto rho = product_diag({0.25, 0.75}, {0.5, 0.5});
  CHECK(rho.dim() == 2);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.125));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.375));
  CHECK(error_code_of([] { product_diag({1.0}, {1.0}); }) == ErrorCode::Shape);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::MaxEntangled, Family::Isotropic, Family::Example1, Family::Example2,
                   Family::PhiX, Family::PhiMixture, Family::Rho3, Family::RhoZero,
                   Family::ProductDiag, Family::RandomDensity})
    CHECK(parse_family(to_string(f)) == f);
  CHECK(error_code_of([] { parse_family("bogus"); }) == ErrorCode::Parse);

  StateSpec spec;
  spec.family = Family::Isotropic;
  spec.dim = 2;
  spec.theta = 0.3;
  CHECK(max_abs(build_state(spec).matrix() - isotropic(2, 0.3).matrix()) == 0.0);
}
