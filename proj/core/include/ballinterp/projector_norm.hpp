#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ballinterp/geometry.hpp"

namespace ballinterp {

// Sign assignment f in {-1,+1}^{n+1} with the last entry fixed to +1; global
// sign flips leave the norm objective unchanged, so this quotient halves the
// enumeration.
class SignVector {
 public:
  explicit SignVector(std::vector<int> signs);

  // Decodes a compact mask: bit i set means slot i is -1 (i < size-1); the
  // last slot is always +1.
  static SignVector from_mask(std::uint32_t mask, int size);

  const std::vector<int>& signs() const { return signs_; }
  int size() const { return static_cast<int>(signs_.size()); }
  int negative_count() const;
  std::uint32_t mask() const;

 private:
  std::vector<int> signs_;
};

// Certificate for the exact projector norm
//   ||P|| = max_f [ R * ||v(f)|| + |sum_j f_j lambda_j(center)| ],
// where v(f)_i = sum_j f_j l_ij.  The maximum of sum_j |lambda_j| over the
// ball is attained at extremal_point on the sphere.
struct NormCertificate {
  double value = 0.0;                  // the norm; always >= 1
  SignVector signs;                    // lexicographically smallest maximizer
  Point extremal_point;                // on the ball boundary
  int k = 0;                           // negative-sign count, reported in the
                                       // half convention min(c, n+1-c)
  Eigen::VectorXd direction;           // v(f) for the stored signs

  // All sign masks within 1e-12 of the max (capped; see flag), plus the ball
  // the certificate was computed against, kept for the witness search.
  std::vector<std::uint32_t> maximizer_masks;
  bool maximizers_truncated = false;
  Point ball_center;
  double ball_radius = 0.0;
};

// Exact norm by canonical sign enumeration (2^n candidates, Gray-code order).
// Refuses with EnumerationCapError when n+1 > 26; use norm_lower_bound_mc for
// larger dimensions.  Throws DegenerateSimplexError via lagrange_basis.
NormCertificate projector_norm(const Simplex& s, const Ball& ball);

// Same maximization restricted to simplices whose centroid coincides with the
// ball center (within 1e-9 * radius); the center term simplifies to
// |sum_j f_j| / (n+1).  Throws PreconditionError naming the offset otherwise.
NormCertificate projector_norm_centered(const Simplex& s, const Ball& ball);

// Objective value only; skips certificate assembly (used by the optimizer).
double projector_norm_value(const Simplex& s, const Ball& ball);

// Monte Carlo lower bound: max of sum_j |lambda_j| over `samples` uniform
// points on the sphere.  Deterministic for a fixed seed; never exceeds the
// exact norm (up to 1e-9 roundoff).
double norm_lower_bound_mc(const Simplex& s, const Ball& ball, std::int64_t samples,
                           std::uint64_t seed);

// Searches every retained maximizer for a norm-attaining boundary point at
// which exactly one barycentric coordinate is negative (below -1e-10).
// Returns the first such point, or nullopt (e.g. n = 1, where the extremal
// coordinate is zero, not negative).
std::optional<Point> one_point_witness(const NormCertificate& cert, const LagrangeBasis& basis);

}  // namespace ballinterp
