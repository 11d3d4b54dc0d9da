#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "fef/sweep.hpp"

using namespace fef;
using testing::error_code_of;

TEST_CASE("sweep domains") {
  CHECK(sweep_domain(Family::Example1, 3) == std::pair(0.0, 1.0));
  CHECK(sweep_domain(Family::PhiX, 3) == std::pair(0.0, 0.5));
  CHECK(sweep_domain(Family::Isotropic, 3).first == doctest::Approx(-1.0 / 8.0));
  CHECK(error_code_of([] { sweep_domain(Family::RandomDensity, 3); }) == ErrorCode::Usage);
}

TEST_CASE("sweep grid") {
  SweepSpec spec;
  spec.steps = 101;
  const auto grid = sweep_grid(spec);
  REQUIRE(grid.size() == 101);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(grid[50] == doctest::Approx(0.5));

  spec.to = 1.5;
  CHECK(error_code_of([&] { sweep_grid(spec); }) == ErrorCode::Range);
  spec.to = 1.0;
  spec.steps = 0;
  CHECK(error_code_of([&] { sweep_grid(spec); }) == ErrorCode::Range);
}

TEST_CASE("example1 sweep reproduces the closed-form curves") {
  SweepSpec spec;
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 101);
  const double r3 = std::sqrt(3.0);
  for (const auto& row : rows) {
    const double a = row.param;
    CHECK(std::abs(row.thm1 - (3 + 33 * a + 2 * std::sqrt(1 - a * a)) / (12 + 96 * a)) < 1e-12);
    CHECK(std::abs(row.cor1 - (3 + r3 + (51 - r3) * a + 2 * std::sqrt(3 * (1 - a * a))) / (18 * (8 * a + 1))) < 1e-12);
    CHECK(std::abs(row.f - (17 * a + 1) / (48 * a + 6)) < 1e-12);
    CHECK_FALSE(row.fef_numeric.has_value());
  }
  REQUIRE(rows.back().fef_exact.has_value());
  CHECK(*rows.back().fef_exact == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("example2 thresholds") {
  SweepSpec spec;
  spec.family = Family::Example2;
  const auto roots = find_thresholds(spec);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - (2 - std::sqrt(2.0)) / 4) < 1e-9);
  CHECK(std::abs(roots[1] - (2 + std::sqrt(2.0)) / 4) < 1e-9);
  CHECK(thresholds_csv(roots).rfind("threshold\n", 0) == 0);
}

TEST_CASE("rho3 sweep reports the exact column") {
  SweepSpec spec;
  spec.family = Family::Rho3;
  spec.steps = 11;
  for (const auto& row : run_sweep(spec)) {
    REQUIRE(row.fef_exact.has_value());
    CHECK(std::abs(*row.fef_exact - (1 + row.param) / 2) < 1e-12);
    CHECK(*row.fef_exact > 1.0 / 3.0);
  }
}

TEST_CASE("sweep CSV layout and determinism") {
  SweepSpec spec;
  spec.family = Family::PhiX;
  spec.from = 0.0;
  spec.to = 0.5;
  spec.steps = 3;
  OptimizerConfig cfg;
  cfg.restarts = 2;
  spec.optimizer = cfg;
  const std::string a = sweep_csv(run_sweep(spec));
  const std::string b = sweep_csv(run_sweep(spec));
  CHECK(a == b);
  std::istringstream lines(a);
  std::string header;
  std::getline(lines, header);
  CHECK(header == kSweepHeader);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(count == 3);

  SweepSpec plain;
  plain.steps = 2;
  const std::string csv = sweep_csv(run_sweep(plain));
  // Missing numeric column stays empty.
  CHECK(csv.find(",,") != std::string::npos);
}
