#pragma once

#include <cstdint>
#include <random>

#include "fef/types.hpp"

namespace fef {

/// Seed used by the CLI and the acceptance suite when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20240917ULL;

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for sub-stream `index` of `base`. Streams for different indices are
/// decorrelated and do not depend on how many streams are drawn.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

/// Portable random source. Only mt19937_64 output (fully specified by the
/// standard) is consumed, so sequences are identical across standard
/// libraries; normals come from Box-Muller rather than
/// std::normal_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// d x d matrix of i.i.d. standard complex Gaussians (Ginibre ensemble).
CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

}  // namespace fef
