#include "fef/gellmann.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fef/error.hpp"

namespace fef {
namespace {

void check_dim(int d) {
  if (d < 2) {
    throw Error(ErrorCode::InvalidDimension,
                "dimension must be at least 2, got " + std::to_string(d));
  }
}

void check_range(int d, int i) {
  if (i < 1 || i > d * d - 1) {
    throw Error(ErrorCode::Index, "generator index " + std::to_string(i) +
                                      " outside [1, " +
                                      std::to_string(d * d - 1) + "]");
  }
}

// Position of (l, k) in the lexicographic list of pairs l < k.
int pair_offset(int d, int l, int k) {
  // Pairs with first element < l: sum_{a<l} (d - 1 - a).
  return l * (2 * d - l - 1) / 2 + (k - l - 1);
}

}  // namespace

GellMannBasis::GellMannBasis(int d) : d_(d) {
  check_dim(d);
  const int n = d * d - 1;
  generators_.reserve(n);
  classes_.reserve(n);

  for (int m = 0; m <= d - 2; ++m) {
    const double norm = std::sqrt(2.0 / ((m + 1.0) * (m + 2.0)));
    CMatrix w = CMatrix::Zero(d, d);
    for (int t = 0; t <= m; ++t) w(t, t) = norm;
    w(m + 1, m + 1) = -(m + 1.0) * norm;
    generators_.push_back(std::move(w));
    classes_.push_back({GeneratorClass::Omega1, std::nullopt, m});
  }
  for (int l = 0; l < d; ++l) {
    for (int k = l + 1; k < d; ++k) {
      CMatrix u = CMatrix::Zero(d, d);
      u(l, k) = 1.0;
      u(k, l) = 1.0;
      generators_.push_back(std::move(u));
      classes_.push_back({GeneratorClass::Omega2, std::pair{l, k}, std::nullopt});
    }
  }
  for (int l = 0; l < d; ++l) {
    for (int k = l + 1; k < d; ++k) {
      CMatrix v = CMatrix::Zero(d, d);
      v(l, k) = Complex(0.0, -1.0);
      v(k, l) = Complex(0.0, 1.0);
      generators_.push_back(std::move(v));
      classes_.push_back({GeneratorClass::Omega3, std::pair{l, k}, std::nullopt});
    }
  }

  nonzeros_.resize(n);
  for (int idx = 0; idx < n; ++idx) {
    const CMatrix& g = generators_[idx];
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (g(r, c) != Complex(0.0, 0.0)) nonzeros_[idx].push_back({r, c, g(r, c)});
      }
    }
  }
}

void GellMannBasis::check_index(int i) const { check_range(d_, i); }

const CMatrix& GellMannBasis::generator(int i) const {
  check_index(i);
  return generators_[i - 1];
}

const IndexClass& GellMannBasis::index_class(int i) const {
  check_index(i);
  return classes_[i - 1];
}

std::span<const GeneratorEntry> GellMannBasis::nonzeros(int i) const {
  check_index(i);
  return nonzeros_[i - 1];
}

GellMannBasis basis(int d) { return GellMannBasis(d); }

const GellMannBasis& cached_basis(int d) {
  check_dim(d);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GellMannBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<GellMannBasis>(d);
  return *slot;
}

IndexClass index_class(int d, int i) {
  check_dim(d);
  check_range(d, i);
  if (i <= d - 1) return {GeneratorClass::Omega1, std::nullopt, i - 1};

  const int pairs = d * (d - 1) / 2;
  const bool symmetric = i < d + pairs;
  int offset = symmetric ? i - d : i - d - pairs;
  int l = 0;
  while (offset >= d - 1 - l) {
    offset -= d - 1 - l;
    ++l;
  }
  return {symmetric ? GeneratorClass::Omega2 : GeneratorClass::Omega3,
          std::pair{l, l + 1 + offset}, std::nullopt};
}

int pair_index(int d, GeneratorClass cls, int l, int k) {
  check_dim(d);
  if (cls == GeneratorClass::Omega1 || l < 0 || k <= l || k >= d) {
    throw Error(ErrorCode::Index, "invalid generator pair (" + std::to_string(l) +
                                      ", " + std::to_string(k) + ")");
  }
  const int base = cls == GeneratorClass::Omega2 ? d : d * (d + 1) / 2;
  return base + pair_offset(d, l, k);
}

std::vector<double> generator_spectrum(int d, int i) {
  check_dim(d);
  check_range(d, i);
  std::vector<double> spectrum;
  spectrum.reserve(d);
  if (i <= d - 1) {
    const double top = std::sqrt(2.0 / (i * (i + 1.0)));
    spectrum.assign(i, top);
    spectrum.insert(spectrum.end(), d - 1 - i, 0.0);
    spectrum.push_back(-i * top);
  } else {
    spectrum.push_back(1.0);
    spectrum.insert(spectrum.end(), d - 2, 0.0);
    spectrum.push_back(-1.0);
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

}  // namespace fef
