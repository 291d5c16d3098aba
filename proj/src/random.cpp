#include "lieqrt/random.hpp"

#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"

namespace lieqrt {

namespace {
std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Operator gaussian_matrix(Index d, Rng& rng) {
  Operator m(d, d);
  // Column-major fill order is part of the reproducibility contract.
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) m(i, j) = rng.complex_normal();
  return m;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

Operator ginibre(Index d, Rng& rng) {
  require(d >= 1 && d <= kMaxDim, ErrorKind::InvalidInput, "ginibre: dimension out of range");
  for (;;) {
    Operator m = gaussian_matrix(d, rng);
    if (sigma_min(m) >= 1e-8) return m;
  }
}

Operator haar_unitary(Index d, Rng& rng) {
  require(d >= 1 && d <= kMaxDim, ErrorKind::InvalidInput,
          "haar_unitary: dimension out of range");
  return qr_positive(ginibre(d, rng)).q;
}

State haar_state(Index d, Rng& rng) {
  require(d >= 1 && d <= kMaxDim, ErrorKind::InvalidInput, "haar_state: dimension out of range");
  State v(d);
  for (Index i = 0; i < d; ++i) v(i) = rng.complex_normal();
  double n = v.norm();
  while (n == 0.0) {
    for (Index i = 0; i < d; ++i) v(i) = rng.complex_normal();
    n = v.norm();
  }
  return v / n;
}

}  // namespace lieqrt
