#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"

#include "fef/error.hpp"
#include "fef/gellmann.hpp"

using fef::CMatrix;
using fef::Complex;
using fef::GeneratorClass;

namespace {

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Lexicographic pairs (l, k), l < k, written out independently of the
// library's index arithmetic.
std::vector<std::pair<int, int>> pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < d; ++l)
    for (int k = l + 1; k < d; ++k) out.emplace_back(l, k);
  return out;
}

}  // namespace

TEST_CASE("d = 2 generators are sigma_z, sigma_x, sigma_y in that order") {
  const auto gm = fef::basis(2);
  REQUIRE(gm.size() == 3);
  const Complex i(0.0, 1.0);
  CHECK(max_abs(gm.generator(1) - mat2(1, 0, 0, -1)) == 0.0);
  CHECK(max_abs(gm.generator(2) - mat2(0, 1, 1, 0)) == 0.0);
  CHECK(max_abs(gm.generator(3) - mat2(0, -i, i, 0)) == 0.0);
}

TEST_CASE("d = 3 index sets and omega_1") {
  const auto gm = fef::basis(3);
  REQUIRE(gm.size() == 8);
  for (int i : {1, 2}) CHECK(gm.class_of(i) == GeneratorClass::Omega1);
  for (int i : {3, 4, 5}) CHECK(gm.class_of(i) == GeneratorClass::Omega2);
  for (int i : {6, 7, 8}) CHECK(gm.class_of(i) == GeneratorClass::Omega3);

  CMatrix w1 = CMatrix::Zero(3, 3);
  w1.diagonal() << 1.0, 1.0, -2.0;
  w1 /= std::sqrt(3.0);
  CHECK(max_abs(gm.generator(2) - w1) < 1e-15);
}

TEST_CASE("index_class examples") {
  const auto first = fef::index_class(3, 1);
  CHECK(first.cls == GeneratorClass::Omega1);
  CHECK(first.omega_index == 0);
  CHECK_FALSE(first.pair.has_value());

  const auto five = fef::index_class(3, 5);
  CHECK(five.cls == GeneratorClass::Omega2);
  CHECK(five.pair == std::pair{1, 2});

  const auto eight = fef::index_class(3, 8);
  CHECK(eight.cls == GeneratorClass::Omega3);
  CHECK(eight.pair == std::pair{1, 2});
}

TEST_CASE("index ranges and pair enumeration for d = 2..7") {
  for (int d = 2; d <= 7; ++d) {
    const auto gm = fef::basis(d);
    const auto lex = pairs(d);
    int n1 = 0, n2 = 0, n3 = 0;
    for (int i = 1; i <= d * d - 1; ++i) {
      const auto ic = fef::index_class(d, i);
      CHECK(ic.cls == gm.class_of(i));
      CHECK(ic.pair == gm.index_class(i).pair);
      switch (ic.cls) {
        case GeneratorClass::Omega1:
          CHECK(i <= d - 1);
          CHECK(*ic.omega_index == i - 1);
          ++n1;
          break;
        case GeneratorClass::Omega2:
          CHECK(i >= d);
          CHECK(i <= (d - 1) * (d + 2) / 2);
          CHECK(*ic.pair == lex[i - d]);
          CHECK(fef::pair_index(d, ic.cls, ic.pair->first, ic.pair->second) == i);
          ++n2;
          break;
        case GeneratorClass::Omega3:
          CHECK(i >= d * (d + 1) / 2);
          CHECK(*ic.pair == lex[i - d * (d + 1) / 2]);
          CHECK(fef::pair_index(d, ic.cls, ic.pair->first, ic.pair->second) == i);
          ++n3;
          break;
      }
    }
    CHECK(n1 == d - 1);
    CHECK(n2 == d * (d - 1) / 2);
    CHECK(n3 == d * (d - 1) / 2);
  }
}

TEST_CASE("generators are Hermitian, traceless and trace-orthogonal") {
  for (int d = 2; d <= 5; ++d) {
    const auto gm = fef::basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      const CMatrix& g = gm.generator(i);
      CHECK(max_abs(g - g.adjoint()) == 0.0);
      CHECK(std::abs(g.trace()) < 1e-14);
      CHECK(max_abs(g.transpose() - gm.transpose_sign(i) * g) == 0.0);
      for (int j = 1; j <= gm.size(); ++j) {
        const Complex tr = (g * gm.generator(j)).trace();
        CHECK(std::abs(tr - Complex(i == j ? 2.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("diagonal and off-diagonal matrix elements") {
  const Complex iu(0.0, 1.0);
  for (int d = 2; d <= 5; ++d) {
    const auto gm = fef::basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      const CMatrix& g = gm.generator(i);
      const auto ic = gm.index_class(i);
      for (int s = 0; s < d; ++s) {
        Complex expected = 0.0;
        if (ic.cls == GeneratorClass::Omega1) {
          const double w = std::sqrt(2.0 / (i * (i + 1.0)));
          if (s <= i - 1) expected = w;
          if (s == i) expected = -i * w;
        }
        CHECK(std::abs(g(s, s) - expected) < 1e-14);
      }
      for (int s = 0; s < d; ++s) {
        for (int t = 0; t < d; ++t) {
          if (s == t) continue;
          Complex expected = 0.0;
          if (ic.cls != GeneratorClass::Omega1) {
            const auto [l, k] = *ic.pair;
            if (ic.cls == GeneratorClass::Omega2 && ((s == l && t == k) || (s == k && t == l)))
              expected = 1.0;
            if (ic.cls == GeneratorClass::Omega3 && s == k && t == l) expected = iu;
            if (ic.cls == GeneratorClass::Omega3 && s == l && t == k) expected = -iu;
          }
          CHECK(g(s, t) == expected);
        }
      }
    }
  }
}

TEST_CASE("closed-form spectra") {
  auto near = [](const std::vector<double>& got, std::vector<double> want) {
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-15));
  };
  near(fef::generator_spectrum(3, 1), {1.0, -1.0, 0.0});
  near(fef::generator_spectrum(3, 4), {1.0, 0.0, -1.0});
  near(fef::generator_spectrum(2, 1), {1.0, -1.0});

  for (int d = 2; d <= 5; ++d) {
    const auto gm = fef::basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(gm.generator(i));
      const auto closed = fef::generator_spectrum(d, i);
      for (int k = 0; k < d; ++k) CHECK(std::abs(eig.eigenvalues()(k) - closed[k]) < 1e-12);
    }
  }
}

TEST_CASE("invalid dimension and index errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const fef::Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return fef::ErrorCode::Usage;
  };
  CHECK(code_of([] { fef::basis(1); }) == fef::ErrorCode::InvalidDimension);
  CHECK(code_of([] { fef::index_class(3, 0); }) == fef::ErrorCode::Index);
  CHECK(code_of([] { fef::index_class(3, 9); }) == fef::ErrorCode::Index);
  CHECK(code_of([] { fef::generator_spectrum(2, 4); }) == fef::ErrorCode::Index);
  CHECK(code_of([] { fef::basis(3).generator(0); }) == fef::ErrorCode::Index);
}

TEST_CASE("cached basis is shared") {
  const auto& a = fef::cached_basis(4);
  const auto& b = fef::cached_basis(4);
  CHECK(&a == &b);
  CHECK(a.size() == 15);
}
