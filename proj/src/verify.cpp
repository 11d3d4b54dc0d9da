#include "fef/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fef/bounds.hpp"
#include "fef/gellmann.hpp"
#include "fef/linalg.hpp"
#include "fef/optimizer.hpp"
#include "fef/report.hpp"
#include "fef/states.hpp"

namespace fef {
namespace {

bool full(const VerifyOptions& o) { return o.level == VerifyLevel::Full; }

int count(const VerifyOptions& o, int full_count, int fast_count) {
  return full(o) ? full_count : fast_count;
}

// Tracks the largest deviation and compares it against a tolerance.
struct Tally {
  SuiteResult r;

  Tally(std::string name, double tol) {
    r.name = std::move(name);
    r.tolerance = tol;
  }
  void add(double deviation) {
    ++r.cases;
    if (!(deviation <= r.max_deviation)) r.max_deviation = deviation;  // NaN sticks
  }
  SuiteResult done() {
    r.passed = r.max_deviation <= r.tolerance;
    return r;
  }
};

DensityMatrix sample_state(int d, std::uint64_t seed, int k) {
  const int rank = 1 + k % (d * d);
  return random_density(d, rank, split_seed(seed, static_cast<std::uint64_t>(k)));
}

RMatrix random_orthogonal(int n, Rng& rng) {
  RMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<RMatrix> qr(g);
  return qr.householderQ();
}

OptimizerConfig cfg_with(std::uint64_t seed, int restarts) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

}  // namespace

SuiteResult verify_generator_orthogonality(const VerifyOptions&) {
  Tally t("gellmann.orthogonality", 1e-12);
  for (int d = 2; d <= 5; ++d) {
    const GellMannBasis& gm = cached_basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      for (int j = 1; j <= gm.size(); ++j) {
        const Complex tr = (gm.generator(i) * gm.generator(j)).trace();
        t.add(std::abs(tr - Complex(i == j ? 2.0 : 0.0, 0.0)));
      }
    }
  }
  return t.done();
}

SuiteResult verify_generator_elements(const VerifyOptions&) {
  Tally t("gellmann.matrix_elements", 1e-12);
  for (int d = 2; d <= 5; ++d) {
    const GellMannBasis& gm = cached_basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      const CMatrix& g = gm.generator(i);
      const IndexClass ic = gm.index_class(i);
      for (int s = 0; s < d; ++s) {
        for (int u = 0; u < d; ++u) {
          Complex expected{};
          if (s == u && ic.cls == GeneratorClass::Omega1) {
            const double w = std::sqrt(2.0 / (i * (i + 1.0)));
            if (s <= i - 1) expected = w;
            else if (s == i) expected = -i * w;
          } else if (s != u && ic.cls != GeneratorClass::Omega1) {
            const auto [l, k] = *ic.pair;
            if (ic.cls == GeneratorClass::Omega2 && ((s == l && u == k) || (s == k && u == l))) {
              expected = 1.0;
            } else if (ic.cls == GeneratorClass::Omega3 && s == k && u == l) {
              expected = Complex(0.0, 1.0);
            } else if (ic.cls == GeneratorClass::Omega3 && s == l && u == k) {
              expected = Complex(0.0, -1.0);
            }
          }
          t.add(std::abs(g(s, u) - expected));
        }
      }
    }
  }
  return t.done();
}

SuiteResult verify_generator_spectra(const VerifyOptions&) {
  Tally t("gellmann.spectrum", 1e-12);
  for (int d = 2; d <= 5; ++d) {
    const GellMannBasis& gm = cached_basis(d);
    for (int i = 1; i <= gm.size(); ++i) {
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(gm.generator(i), Eigen::EigenvaluesOnly);
      const std::vector<double> closed = generator_spectrum(d, i);
      for (int k = 0; k < d; ++k) t.add(std::abs(eig.eigenvalues()(k) - closed[k]));
    }
  }
  return t.done();
}

SuiteResult verify_round_trip(const VerifyOptions& opts) {
  Tally t("bloch.round_trip", 1e-10);
  const int n = count(opts, 200, 20);
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 100 + d), k);
      t.add((reconstruct(decompose(rho)) - rho.matrix()).cwiseAbs().maxCoeff());
    }
  }
  return t.done();
}

SuiteResult verify_purity(const VerifyOptions& opts) {
  Tally t("bloch.purity", 1e-9);
  const int n = count(opts, 200, 20);
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 200 + d), k);
      const double direct = (rho.matrix() * rho.matrix()).trace().real();
      t.add(std::abs(direct - bloch_purity(decompose(rho))));
    }
  }
  return t.done();
}

SuiteResult verify_kyfan_invariance(const VerifyOptions& opts) {
  Tally t("bloch.kyfan_invariance", 1e-10);
  Rng rng(split_seed(opts.seed, 300));
  const int n = count(opts, 200, 20);
  for (int k = 0; k < n; ++k) {
    const int size = 3 + k % 13;
    RMatrix m(size, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) m(i, j) = rng.normal();
    }
    const double base = kyfan_norm(m);
    const RMatrix left = random_orthogonal(size, rng);
    const RMatrix right = random_orthogonal(size, rng);
    t.add(std::abs(kyfan_norm(left * m) - base));
    t.add(std::abs(kyfan_norm(m * right) - base));
    const RVector diag = m.diagonal();
    t.add(std::abs(kyfan_norm(RMatrix(diag.asDiagonal())) - diag.cwiseAbs().sum()));
  }
  return t.done();
}

SuiteResult verify_bloch_objective(const VerifyOptions& opts) {
  Tally t("fef_bounds.bloch_objective", 1e-9);
  const BlochObjective objective =
      opts.bloch_objective ? opts.bloch_objective : BlochObjective(fef_bloch_objective);
  const int n = count(opts, 1000, 100);
  for (int d = 2; d <= 4; ++d) {
    Rng rng(split_seed(opts.seed, 400 + d));
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 410 + d), k);
      const CMatrix u = haar_unitary(d, rng);
      t.add(std::abs(objective(decompose(rho), u) - fef_objective(rho, u)));
    }
  }
  return t.done();
}

SuiteResult verify_singlet_fraction(const VerifyOptions& opts) {
  Tally t("fef_bounds.singlet_fraction", 1e-10);
  const int n = count(opts, 1000, 100);
  for (int d = 2; d <= 4; ++d) {
    const CVector phi = phi_plus(d);
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 500 + d), k);
      const double direct = phi.dot(rho.matrix() * phi).real();
      t.add(std::abs(singlet_fraction(decompose(rho)) - direct));
    }
  }
  return t.done();
}

SuiteResult verify_delta_envelope(const VerifyOptions& opts) {
  Tally t("fef_bounds.delta_envelope", 1e-9);
  const int n = count(opts, 1000, 100);
  for (int d = 2; d <= 4; ++d) {
    Rng rng(split_seed(opts.seed, 600 + d));
    const int m = d * d - 1;
    for (int k = 0; k < n; ++k) {
      const RMatrix delta = delta_matrix(d, haar_unitary(d, rng));
      double worst = 0.0;
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          const DeltaBound env = delta_bound(d, i, j);
          const double x = delta(i - 1, j - 1);
          worst = std::max({worst, env.lo - x, x - env.hi});
        }
      }
      t.add(worst);
    }
  }
  return t.done();
}

SuiteResult verify_bound_ordering(const VerifyOptions& opts) {
  Tally t("fef_bounds.ordering", 1e-12);
  const int n = count(opts, 200, 20);
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 700 + d), k);
      const BlochDecomposition b = decompose(rho);
      const double f = singlet_fraction(b);
      const double thm1 = upper_bound_thm1(b).value;
      const double cor1 = upper_bound_cor1(b);
      const double prior = upper_bound_prior(b);
      t.add(std::max({thm1 - cor1, f - thm1, f - prior, 0.0}));
    }
  }
  return t.done();
}

SuiteResult verify_exact_diagonal(const VerifyOptions& opts) {
  Tally t("fef_bounds.exact_diagonal", 1e-9);
  Rng rng(split_seed(opts.seed, 800));
  const int n = count(opts, 200, 20);
  auto check = [&](const DensityMatrix& rho) {
    const BlochDecomposition b = decompose(rho);
    const auto exact = exact_fef_thm3(b);
    if (!exact) {
      t.add(INFINITY);
      return;
    }
    // Under the exactness conditions the singlet fraction and the Ky-Fan bound meet the exact value.
    t.add(std::max(std::abs(*exact - singlet_fraction(b)),
                   std::abs(*exact - upper_bound_cor1(b))));
  };
  for (int k = 0; k < n; ++k) {
    check(phi_x(0.5 * k / (n - 1.0)));
    const int d = 2 + k % 3;
    check(isotropic(d, static_cast<double>(k) / (n - 1.0)));
    std::vector<MixtureTerm> terms;
    const int parts = 1 + k % 4;
    double total = 0.0;
    for (int p = 0; p < parts; ++p) {
      terms.push_back({0.05 + rng.uniform(), 0.5 * rng.uniform()});
      total += terms.back().weight;
    }
    for (auto& term : terms) term.weight /= total;
    double sum = 0.0;
    for (std::size_t p = 0; p + 1 < terms.size(); ++p) sum += terms[p].weight;
    terms.back().weight = 1.0 - sum;
    check(phi_mixture(terms));
  }
  return t.done();
}

SuiteResult verify_haar_moments(const VerifyOptions& opts) {
  Tally t("optimizer.haar_moment", 0.01);
  const int n = count(opts, 100000, 10000);
  for (int d = 2; d <= 4; ++d) {
    Rng rng(split_seed(opts.seed, 900 + d));
    double acc = 0.0;
    double defect = 0.0;
    for (int k = 0; k < n; ++k) {
      const CMatrix u = haar_unitary(d, rng);
      acc += std::norm(u(0, 0));
      if (k < 100) defect = std::max(defect, unitarity_defect(u));
    }
    t.add(std::abs(acc / n - 1.0 / d));
    t.add(defect <= 1e-10 ? 0.0 : INFINITY);
  }
  return t.done();
}

SuiteResult verify_optimizer_lower_bound(const VerifyOptions& opts) {
  Tally t("optimizer.lower_bound", 1e-12);
  const int n = count(opts, 20, 4);
  for (int d = 2; d <= 3; ++d) {
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 1000 + d), k);
      const OptimizationResult res = maximize_fef(rho, cfg_with(split_seed(opts.seed, k), 4));
      t.add(std::abs(fef_objective(rho, res.best_unitary) - res.best_value));
      t.add(std::max(0.0, fef_objective(rho, CMatrix::Identity(d, d)) - res.best_value));
      const OptimizationResult again = maximize_fef(rho, cfg_with(split_seed(opts.seed, k), 4));
      t.add(again.best_value == res.best_value ? 0.0 : INFINITY);
    }
  }
  return t.done();
}

SuiteResult verify_sandwich(const VerifyOptions& opts) {
  Tally t("optimizer.sandwich", kSandwichSlack);
  const int n = count(opts, 100, 10);
  for (int d = 2; d <= 3; ++d) {
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 1100 + d), k);
      const BoundReport rep = full_report(rho, cfg_with(split_seed(opts.seed, k), 8));
      const double numeric = *rep.numeric_fef;
      t.add(std::max({rep.singlet_fraction - numeric, numeric - rep.thm1_bound,
                      numeric - rep.cor1_bound, numeric - rep.prior_bound, 0.0}));
    }
  }
  return t.done();
}

SuiteResult verify_local_unitary_invariance(const VerifyOptions& opts) {
  Tally t("optimizer.local_unitary_invariance", 1e-5);
  const int n = count(opts, 20, 3);
  for (int d = 2; d <= 3; ++d) {
    Rng rng(split_seed(opts.seed, 1200 + d));
    for (int k = 0; k < n; ++k) {
      const DensityMatrix rho = sample_state(d, split_seed(opts.seed, 1210 + d), k);
      const CMatrix v = kron(haar_unitary(d, rng), haar_unitary(d, rng));
      CMatrix rotated = v * rho.matrix() * v.adjoint();
      rotated = 0.5 * (rotated + rotated.adjoint()).eval();
      const OptimizerConfig cfg = cfg_with(split_seed(opts.seed, k), 16);
      const double a = maximize_fef(rho, cfg).best_value;
      const double b = maximize_fef(validate_density(rotated), cfg).best_value;
      t.add(std::abs(a - b));
    }
  }
  return t.done();
}

SuiteResult verify_oracle_agreement(const VerifyOptions& opts) {
  Tally t("optimizer.oracle_agreement", 1e-6);
  const int n = count(opts, 50, 5);
  const OptimizerConfig cfg = cfg_with(opts.seed, 32);
  for (int k = 0; k < n; ++k) {
    const DensityMatrix rho = sample_state(2, split_seed(opts.seed, 1300), k);
    const BlochDecomposition b = decompose(rho);
    const double numeric = maximize_fef(rho, cfg).best_value;
    t.add(std::abs(numeric - fef_two_qubit_exact(b)));
    if (b.t.determinant() <= 0.0) t.add(std::abs(numeric - fef_two_qubit(b)));

    const DensityMatrix iso = isotropic(2 + k % 3, static_cast<double>(k) / n);
    t.add(std::abs(maximize_fef(iso, cfg).best_value - *exact_fef_thm3(decompose(iso))));

    const DensityMatrix phi = phi_x(0.5 * k / n);
    t.add(std::abs(maximize_fef(phi, cfg).best_value - *exact_fef_thm3(decompose(phi))));
  }
  return t.done();
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  return {
      verify_generator_orthogonality(opts),
      verify_generator_elements(opts),
      verify_generator_spectra(opts),
      verify_round_trip(opts),
      verify_purity(opts),
      verify_kyfan_invariance(opts),
      verify_bloch_objective(opts),
      verify_singlet_fraction(opts),
      verify_delta_envelope(opts),
      verify_bound_ordering(opts),
      verify_exact_diagonal(opts),
      verify_haar_moments(opts),
      verify_optimizer_lower_bound(opts),
      verify_sandwich(opts),
      verify_local_unitary_invariance(opts),
      verify_oracle_agreement(opts),
  };
}

}  // namespace fef
