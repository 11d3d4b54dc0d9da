// Command-line front end: bound reports, parameter sweeps, matrix export and
// the invariant verification suites.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fef/error.hpp"
#include "fef/io.hpp"
#include "fef/report.hpp"
#include "fef/states.hpp"
#include "fef/sweep.hpp"
#include "fef/verify.hpp"

namespace {

struct StateFlags {
  std::string family;
  std::string file;
  int dim = 3;
  double theta = 0.0;
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
  int rank = 0;
};

struct OptimizeFlags {
  bool optimize = false;
  int restarts = 32;
  std::uint64_t seed = fef::kDefaultSeed;

  fef::OptimizerConfig config() const {
    fef::OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
  }
};

void add_state_flags(CLI::App* cmd, StateFlags& s) {
  cmd->add_option("--state", s.family,
                  "State family: maxent, isotropic, example1, example2, phix, rho3, "
                  "rho0, random");
  cmd->add_option("--d", s.dim, "Local dimension (maxent, isotropic, rho0, random)");
  cmd->add_option("--theta", s.theta, "Isotropic mixing parameter");
  cmd->add_option("--a", s.a, "Parameter a of example1");
  cmd->add_option("--x", s.x, "Parameter x of example2 and phix");
  cmd->add_option("--y", s.y, "rho3 parameter");
  cmd->add_option("--rank", s.rank, "Rank of a random state (default d^2)");
}

void add_optimize_flags(CLI::App* cmd, OptimizeFlags& o) {
  cmd->add_flag("--optimize", o.optimize, "Run the numerical maximizer over U(d)");
  cmd->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for random states and optimizer starts");
}

fef::DensityMatrix load_state(const StateFlags& s, std::uint64_t seed) {
  if (!s.file.empty()) {
    if (!s.family.empty()) throw fef::Error(fef::ErrorCode::Usage, "give --state or --file, not both");
    return fef::load_state_file(s.file);
  }
  if (s.family.empty()) throw fef::Error(fef::ErrorCode::Usage, "one of --state or --file is required");
  fef::StateSpec spec;
  spec.family = fef::parse_family(s.family);
  spec.dim = s.dim;
  spec.theta = s.theta;
  spec.a = s.a;
  spec.x = s.x;
  spec.y = s.y;
  spec.rank = s.rank;
  spec.seed = seed;
  if (spec.family == fef::Family::PhiMixture || spec.family == fef::Family::ProductDiag) {
    throw fef::Error(fef::ErrorCode::Usage,
                     std::string("family '") + s.family + "' needs a state file (--file)");
  }
  return fef::build_state(spec);
}

std::string opt_text(const std::optional<double>& v) {
  return v ? fef::format_double(*v) : std::string("-");
}

void print_report(const fef::BoundReport& r) {
  std::printf("dim                       %d\n", r.dim);
  std::printf("singlet_fraction          %s\n", fef::format_double(r.singlet_fraction).c_str());
  std::printf("thm1_bound                %s\n", fef::format_double(r.thm1_bound).c_str());
  std::printf("  T1 T2 T3 T4             %s %s %s %s\n",
              fef::format_double(r.thm1_terms.t1).c_str(),
              fef::format_double(r.thm1_terms.t2).c_str(),
              fef::format_double(r.thm1_terms.t3).c_str(),
              fef::format_double(r.thm1_terms.t4).c_str());
  std::printf("cor1_bound                %s\n", fef::format_double(r.cor1_bound).c_str());
  std::printf("prior_bound               %s\n", fef::format_double(r.prior_bound).c_str());
  std::printf("exact_thm3                %s\n", opt_text(r.exact_thm3).c_str());
  std::printf("two_qubit_exact           %s\n", opt_text(r.two_qubit_exact).c_str());
  std::printf("two_qubit_formula         %s\n", opt_text(r.two_qubit_formula).c_str());
  std::printf("pinned_fef                %s\n", opt_text(r.pinned_fef).c_str());
  std::printf("numeric_fef               %s\n", opt_text(r.numeric_fef).c_str());
  if (r.restarts_agreeing) {
    std::printf("restarts_agreeing         %d\n", *r.restarts_agreeing);
  }
  std::printf("optimal_fidelity          %s (%s)\n", fef::format_double(r.optimal_fidelity).c_str(),
              fef::to_string(r.fidelity_source));
  std::printf("useful_for_teleportation  %s\n", fef::to_string(r.useful));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    fef::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully entangled fraction: bounds, exact values and numerical certification"};
  app.require_subcommand(1);

  StateFlags state;
  OptimizeFlags opt;
  std::string out_path;
  bool json_out = false;

  auto* report = app.add_subcommand("report", "Bounds and exact values for one state");
  add_state_flags(report, state);
  report->add_option("--file", state.file, "Matrix or state JSON file");
  add_optimize_flags(report, opt);
  report->add_flag("--json", json_out, "Print the report as JSON");
  report->add_option("--out", out_path, "Also write the JSON report to this file");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep of a state family as CSV");
  double from = NAN;
  double to = NAN;
  int steps = 101;
  bool find_threshold = false;
  add_state_flags(sweep, state);
  add_optimize_flags(sweep, opt);
  sweep->add_option("--from", from, "Start of the parameter range (default: domain start)");
  sweep->add_option("--to", to, "End of the parameter range (default: domain end)");
  sweep->add_option("--steps", steps, "Number of grid points");
  sweep->add_flag("--find-threshold", find_threshold,
                  "Print parameters where f - 1/d changes sign instead of the rows");
  sweep->add_option("--out", out_path, "Write CSV to this file instead of stdout");

  auto* exporter = app.add_subcommand("export", "Write a state as a JSON matrix file");
  add_state_flags(exporter, state);
  exporter->add_option("--seed", opt.seed, "Seed for random states");
  exporter->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::string level = "fast";
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", opt.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "E_USAGE: %s\n", e.what());
    return 2;
  }

  try {
    if (*report) {
      const fef::DensityMatrix rho = load_state(state, opt.seed);
      const fef::BoundReport rep =
          opt.optimize ? fef::certify(rho, opt.config()) : fef::full_report(rho);
      const std::string json = fef::report_to_json(rep).dump(2) + "\n";
      if (json_out) {
        std::fwrite(json.data(), 1, json.size(), stdout);
      } else {
        print_report(rep);
      }
      if (!out_path.empty()) fef::write_text_file(out_path, json);
      return 0;
    }

    if (*sweep) {
      if (state.family.empty()) throw fef::Error(fef::ErrorCode::Usage, "--state is required");
      fef::SweepSpec spec;
      spec.family = fef::parse_family(state.family);
      spec.dim = state.dim;
      const auto [lo, hi] = fef::sweep_domain(spec.family, spec.dim);
      spec.from = std::isnan(from) ? lo : from;
      spec.to = std::isnan(to) ? hi : to;
      spec.steps = steps;
      if (opt.optimize) spec.optimizer = opt.config();
      emit(find_threshold ? fef::thresholds_csv(fef::find_thresholds(spec))
                          : fef::sweep_csv(fef::run_sweep(spec)),
           out_path);
      return 0;
    }

    if (*exporter) {
      const fef::DensityMatrix rho = load_state(state, opt.seed);
      emit(fef::matrix_to_json(rho.matrix()).dump() + "\n", out_path);
      return 0;
    }

    if (*verify) {
      fef::VerifyOptions vopts;
      vopts.level = level == "full" ? fef::VerifyLevel::Full : fef::VerifyLevel::Fast;
      vopts.seed = opt.seed;
      const auto start = std::chrono::steady_clock::now();
      bool ok = true;
      for (const auto& result : fef::run_verify(vopts)) {
        ok = ok && result.passed;
        std::printf("%-4s %-36s cases=%-7ld max_dev=%-12.3e tol=%.1e\n",
                    result.passed ? "ok" : "FAIL", result.name.c_str(), result.cases,
                    result.max_deviation, result.tolerance);
      }
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::printf("%s in %.1f s\n", ok ? "all suites passed" : "FAILURES", secs);
      return ok ? 0 : 1;
    }
  } catch (const fef::Error& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    std::fprintf(stderr, "%s: %s\n", std::string(fef::error_code_name(e.code())).c_str(),
                 message.c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "E_INTERNAL: %s\n", e.what());
    return 3;
  }
  return 0;
}
