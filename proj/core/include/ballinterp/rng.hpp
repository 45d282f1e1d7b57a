#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace ballinterp {

namespace detail {

// SplitMix64 finalizer: bijective 64-bit mixer with full avalanche.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic counter-based generator.  The i-th draw depends only on
// (seed, stream, i), so streams are reproducible across platforms, independent
// of call interleaving, and safe to fan out per restart / per sample chunk.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(detail::mix64(seed ^ detail::mix64(stream ^ 0x5851f42d4c957f2dull))) {}

  // Uniform in (0, 1]; never returns 0, so log() is always safe.
  double uniform() {
    const std::uint64_t bits = next();
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.  std::normal_distribution is
  // implementation-defined, which would break cross-platform determinism.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform direction on the unit sphere S^{dim-1} (normalized gaussians).
  Eigen::VectorXd sphere_direction(int dim) {
    Eigen::VectorXd v(dim);
    double norm2 = 0.0;
    do {
      for (int i = 0; i < dim; ++i) v[i] = gaussian();
      norm2 = v.squaredNorm();
    } while (norm2 < 1e-290);
    return v / std::sqrt(norm2);
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t next() { return detail::mix64(key_ + counter_++ * 0x9e3779b97f4a7c15ull); }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ballinterp
