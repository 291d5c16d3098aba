#pragma once

#include <cstdint>
#include <random>

#include "lieqrt/types.hpp"

namespace lieqrt {

/// Mixes (seed, index) into an independent child seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Seeded random stream. Owns its engine; copies continue the same sequence
/// independently, so pass by reference to share one stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Fresh stream for worker/trial `index`; does not advance this stream.
  Rng child(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return normal_(engine_); }

  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() {
    constexpr double kHalf = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return {kHalf * re, kHalf * im};
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// d x d matrix of i.i.d. standard complex Gaussians, redrawn until the
/// smallest singular value is at least 1e-8.
Operator ginibre(Index d, Rng& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with the phase fix.
Operator haar_unitary(Index d, Rng& rng);

/// Uniformly distributed unit vector (normalized complex Gaussian).
State haar_state(Index d, Rng& rng);

}  // namespace lieqrt
