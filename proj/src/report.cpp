#include "fef/report.hpp"

#include <algorithm>
#include <sstream>

namespace fef {
namespace {

std::string sandwich_message(double singlet, double numeric, double thm1, double cor1,
                             double prior) {
  std::ostringstream os;
  os.precision(17);
  os << "sandwich violated: f=" << singlet << " numeric=" << numeric << " thm1=" << thm1
     << " cor1=" << cor1 << " prior=" << prior;
  return os.str();
}

}  // namespace

const char* to_string(FidelitySource s) {
  switch (s) {
    case FidelitySource::Exact: return "exact";
    case FidelitySource::Numeric: return "numeric";
    case FidelitySource::UpperBound: return "bound";
  }
  return "bound";
}

double BoundReport::tightest_upper() const {
  return std::min({thm1_bound, cor1_bound, prior_bound});
}

std::optional<double> BoundReport::exact_fef() const {
  if (exact_thm3) return exact_thm3;
  if (two_qubit_exact) return two_qubit_exact;
  return pinned_fef;
}

BoundReport full_report(const DensityMatrix& rho,
                        const std::optional<OptimizerConfig>& optimizer) {
  const BlochDecomposition b = decompose(rho);
  BoundReport rep;
  rep.dim = b.dim;
  rep.singlet_fraction = singlet_fraction(b);
  const WeightedBound thm1 = upper_bound_thm1(b);
  rep.thm1_bound = thm1.value;
  rep.thm1_terms = thm1.terms;
  rep.cor1_bound = upper_bound_cor1(b);
  rep.prior_bound = upper_bound_prior(b);
  rep.exact_thm3 = exact_fef_thm3(b);
  if (b.dim == 2) {
    rep.two_qubit_exact = fef_two_qubit_exact(b);
    rep.two_qubit_formula = fef_two_qubit(b);
  }
  if (rep.tightest_upper() - rep.singlet_fraction < kPinTol) {
    rep.pinned_fef = rep.singlet_fraction;
  }
  if (optimizer) {
    const OptimizationResult opt = maximize_fef(rho, *optimizer);
    rep.numeric_fef = opt.best_value;
    rep.restarts_agreeing = opt.restarts_agreeing;
    rep.optimizer_converged = opt.converged;
  }

  const double d = b.dim;
  rep.useful = useful_for_teleportation(b);
  if (const auto exact = rep.exact_fef()) {
    rep.optimal_fidelity = optimal_fidelity(std::clamp(*exact, 0.0, 1.0), b.dim);
    rep.fidelity_source = FidelitySource::Exact;
    if (rep.useful == Usefulness::Undetermined) {
      rep.useful = *exact > 1.0 / d ? Usefulness::Yes : Usefulness::No;
    }
  } else if (rep.numeric_fef) {
    rep.optimal_fidelity = optimal_fidelity(std::clamp(*rep.numeric_fef, 0.0, 1.0), b.dim);
    rep.fidelity_source = FidelitySource::Numeric;
  } else {
    rep.optimal_fidelity = optimal_fidelity(std::clamp(rep.tightest_upper(), 0.0, 1.0), b.dim);
    rep.fidelity_source = FidelitySource::UpperBound;
  }
  if (rep.useful == Usefulness::Undetermined && rep.numeric_fef && *rep.numeric_fef > 1.0 / d) {
    rep.useful = Usefulness::Yes;
  }
  return rep;
}

CertificationError::CertificationError(double singlet_, double numeric_, double thm1_,
                                       double cor1_, double prior_)
    : Error(ErrorCode::Certification,
            sandwich_message(singlet_, numeric_, thm1_, cor1_, prior_)),
      singlet(singlet_),
      numeric(numeric_),
      thm1(thm1_),
      cor1(cor1_),
      prior(prior_) {}

BoundReport certify(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  BoundReport rep = full_report(rho, cfg);
  const double numeric = *rep.numeric_fef;
  if (numeric < rep.singlet_fraction - kSandwichSlack ||
      numeric > rep.tightest_upper() + kSandwichSlack) {
    throw CertificationError(rep.singlet_fraction, numeric, rep.thm1_bound, rep.cor1_bound,
                             rep.prior_bound);
  }
  return rep;
}

}  // namespace fef
