#include "ballinterp/projector_norm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

#include "ballinterp/rng.hpp"

namespace ballinterp {

namespace {

constexpr int kMaxVertices = 26;         // 2^25 canonical sign vectors at most
constexpr double kTieTolerance = 1e-12;  // window for retained maximizers
constexpr std::size_t kMaximizerCap = std::size_t{1} << 20;
constexpr std::uint64_t kRefreshMask = 1023;  // exact refresh every 1024 steps

// Lexicographic order on sign vectors (-1 sorts before +1).  Slot i is bit i;
// a set bit means -1, so the vector with -1 at the lowest differing slot is
// the smaller one.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t low = (a ^ b) & (~(a ^ b) + 1u);
  return (a & low) != 0;
}

struct SignState {
  Eigen::VectorXd v;  // sum_j f_j grad(lambda_j)
  double lam = 0.0;   // sum_j f_j lam0_j
};

// Exact (non-incremental) evaluation for a given mask.
SignState recompute(std::uint32_t mask, const Eigen::MatrixXd& grads,
                    const Eigen::VectorXd& lam0) {
  const int slots = static_cast<int>(lam0.size());
  SignState st;
  st.v = grads.col(slots - 1);
  st.lam = lam0[slots - 1];
  for (int p = 0; p + 1 < slots; ++p) {
    const double f = ((mask >> p) & 1u) ? -1.0 : 1.0;
    st.v += f * grads.col(p);
    st.lam += f * lam0[p];
  }
  return st;
}

double objective(const SignState& st, double radius) {
  return radius * st.v.norm() + std::abs(st.lam);
}

// Walks all 2^n canonical masks in Gray-code order, updating v and lam with
// one column per step; periodically recomputed from scratch to cap float
// drift.  visit(mask, value) is called for every mask.
template <typename Visit>
void gray_scan(const Eigen::MatrixXd& grads, const Eigen::VectorXd& lam0, double radius,
               Visit&& visit) {
  const int n = static_cast<int>(lam0.size()) - 1;
  const std::uint64_t count = std::uint64_t{1} << n;
  SignState st = recompute(0, grads, lam0);
  std::uint32_t mask = 0;
  visit(mask, objective(st, radius));
  for (std::uint64_t b = 1; b < count; ++b) {
    const int p = std::countr_zero(b);
    mask ^= (std::uint32_t{1} << p);
    const double delta = ((mask >> p) & 1u) ? -2.0 : 2.0;
    st.v += delta * grads.col(p);
    st.lam += delta * lam0[p];
    if ((b & kRefreshMask) == 0) st = recompute(mask, grads, lam0);
    visit(mask, objective(st, radius));
  }
}

struct Enumerated {
  double value = 0.0;
  std::uint32_t lex_mask = 0;
  std::vector<std::pair<std::uint32_t, double>> maximizers;  // (mask, exact value)
  bool truncated = false;
};

// Two passes: find the max, then collect every mask whose exact value lies
// within the tie window.  Candidates flagged by the incremental value are
// re-evaluated from scratch, so tie classification does not inherit drift.
Enumerated enumerate_signs(const Eigen::MatrixXd& grads, const Eigen::VectorXd& lam0,
                           double radius, bool collect_maximizers) {
  double incr_best = -1.0;
  std::uint32_t incr_argmax = 0;
  gray_scan(grads, lam0, radius, [&](std::uint32_t mask, double value) {
    if (value > incr_best) {
      incr_best = value;
      incr_argmax = mask;
    }
  });

  Enumerated out;
  out.value = objective(recompute(incr_argmax, grads, lam0), radius);
  out.lex_mask = incr_argmax;
  if (!collect_maximizers) return out;

  const double guard = kTieTolerance + 1e-10;
  gray_scan(grads, lam0, radius, [&](std::uint32_t mask, double value) {
    if (value < out.value - guard) return;
    const double exact = objective(recompute(mask, grads, lam0), radius);
    if (exact > out.value) out.value = exact;
    if (exact < out.value - guard) return;
    if (out.maximizers.size() < kMaximizerCap) {
      out.maximizers.emplace_back(mask, exact);
    } else {
      out.truncated = true;
    }
  });

  // Final filter against the settled max, then the lexicographic tie-break.
  std::erase_if(out.maximizers,
                [&](const auto& mv) { return mv.second < out.value - kTieTolerance; });
  out.lex_mask = out.maximizers.front().first;
  for (const auto& [mask, v] : out.maximizers) {
    if (lex_less(mask, out.lex_mask)) out.lex_mask = mask;
  }
  return out;
}

void check_dimensions(const Simplex& s, const Ball& ball) {
  if (s.dimension() != ball.dimension()) {
    std::ostringstream msg;
    msg << "simplex dimension " << s.dimension() << " does not match ball dimension "
        << ball.dimension();
    throw DimensionMismatchError(msg.str());
  }
}

void check_enumeration_cap(const Simplex& s) {
  if (s.vertex_count() > kMaxVertices) {
    std::ostringstream msg;
    msg << "exact norm enumeration needs 2^" << s.dimension() << " sign vectors; capped at "
        << kMaxVertices << " vertices. Use norm_lower_bound_mc for a Monte Carlo bound.";
    throw EnumerationCapError(msg.str());
  }
}

// Norm-attaining boundary point for a given sign state.
Point extremal_for(const SignState& st, const Point& center, double radius, bool prefer_minus) {
  const double vnorm = st.v.norm();
  if (vnorm == 0.0) {
    Point p = center;
    p[0] += radius;  // degenerate direction: default to +e_1 off the center
    return p;
  }
  const double s = prefer_minus ? -1.0 : 1.0;
  return center + (s * radius / vnorm) * st.v;
}

NormCertificate build_certificate(const Simplex& s, const Ball& ball,
                                  const Eigen::MatrixXd& grads, const Eigen::VectorXd& lam0,
                                  Enumerated&& enumerated)
{
  const int slots = s.vertex_count();
  SignVector signs = SignVector::from_mask(enumerated.lex_mask, slots);
  const SignState st = recompute(enumerated.lex_mask, grads, lam0);
  const int c = signs.negative_count();

  NormCertificate cert{
      enumerated.value,
      std::move(signs),
      extremal_for(st, ball.center(), ball.radius(), st.lam < 0.0),
      std::min(c, slots - c),  // half-count convention: min(c, n+1-c)
      st.v,
  };
  cert.maximizer_masks.reserve(enumerated.maximizers.size());
  for (const auto& [mask, v] : enumerated.maximizers) cert.maximizer_masks.push_back(mask);
  cert.maximizers_truncated = enumerated.truncated;
  cert.ball_center = ball.center();
  cert.ball_radius = ball.radius();
  return cert;
}

}  // namespace

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw PreconditionError("sign vector must be non-empty");
  for (int v : signs_) {
    if (v != 1 && v != -1) throw PreconditionError("sign vector entries must be -1 or +1");
  }
  if (signs_.back() != 1) {
    throw PreconditionError("canonical sign vectors fix the last entry to +1");
  }
}

SignVector SignVector::from_mask(std::uint32_t mask, int size) {
  std::vector<int> signs(static_cast<std::size_t>(size), 1);
  for (int p = 0; p + 1 < size; ++p) {
    if ((mask >> p) & 1u) signs[static_cast<std::size_t>(p)] = -1;
  }
  return SignVector(std::move(signs));
}

int SignVector::negative_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

std::uint32_t SignVector::mask() const {
  std::uint32_t mask = 0;
  for (int p = 0; p + 1 < size(); ++p) {
    if (signs_[static_cast<std::size_t>(p)] == -1) mask |= (std::uint32_t{1} << p);
  }
  return mask;
}

NormCertificate projector_norm(const Simplex& s, const Ball& ball) {
  check_dimensions(s, ball);
  check_enumeration_cap(s);
  const LagrangeBasis basis = lagrange_basis(s);
  const int n = s.dimension();
  const Eigen::MatrixXd grads = basis.coeffs().topRows(n);
  const Eigen::VectorXd lam0 = barycentric(basis, ball.center());
  return build_certificate(s, ball, grads, lam0,
                           enumerate_signs(grads, lam0, ball.radius(), true));
}

NormCertificate projector_norm_centered(const Simplex& s, const Ball& ball) {
  check_dimensions(s, ball);
  check_enumeration_cap(s);
  const double offset = (centroid(s) - ball.center()).norm();
  if (!(offset <= 1e-9 * ball.radius())) {
    std::ostringstream msg;
    msg << "centered norm requires the simplex centroid at the ball center; offset is " << offset
        << " (allowed " << 1e-9 * ball.radius() << ")";
    throw PreconditionError(msg.str());
  }
  const LagrangeBasis basis = lagrange_basis(s);
  const int n = s.dimension();
  const Eigen::MatrixXd grads = basis.coeffs().topRows(n);
  // With the centroid at the center every lambda_j(center) is exactly 1/(n+1).
  const Eigen::VectorXd lam0 = Eigen::VectorXd::Constant(n + 1, 1.0 / (n + 1));
  return build_certificate(s, ball, grads, lam0,
                           enumerate_signs(grads, lam0, ball.radius(), true));
}

double projector_norm_value(const Simplex& s, const Ball& ball) {
  check_dimensions(s, ball);
  check_enumeration_cap(s);
  const LagrangeBasis basis = lagrange_basis(s);
  const int n = s.dimension();
  const Eigen::MatrixXd grads = basis.coeffs().topRows(n);
  const Eigen::VectorXd lam0 = barycentric(basis, ball.center());
  return enumerate_signs(grads, lam0, ball.radius(), false).value;
}

double norm_lower_bound_mc(const Simplex& s, const Ball& ball, std::int64_t samples,
                           std::uint64_t seed) {
  check_dimensions(s, ball);
  if (samples < 1) throw PreconditionError("norm_lower_bound_mc needs at least one sample");
  const LagrangeBasis basis = lagrange_basis(s);
  const int n = s.dimension();
  double best = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    // One stream per sample index: chunked parallel evaluation would be
    // bit-identical to this sequential loop.
    DetRng rng(seed, static_cast<std::uint64_t>(i));
    const Point x = ball.center() + ball.radius() * rng.sphere_direction(n);
    best = std::max(best, barycentric(basis, x).cwiseAbs().sum());
  }
  return best;
}

std::optional<Point> one_point_witness(const NormCertificate& cert, const LagrangeBasis& basis) {
  const int slots = basis.dimension() + 1;
  const Eigen::MatrixXd grads = basis.coeffs().topRows(basis.dimension());
  const Eigen::VectorXd lam0 = barycentric(basis, cert.ball_center);

  for (std::uint32_t mask : cert.maximizer_masks) {
    const SignState st = recompute(mask, grads, lam0);
    // When the center term vanishes both boundary points attain the max.
    std::vector<bool> sides;
    if (std::abs(st.lam) < 1e-13) {
      sides = {false, true};
    } else {
      sides = {st.lam < 0.0};
    }
    for (bool minus : sides) {
      const Point x = extremal_for(st, cert.ball_center, cert.ball_radius, minus);
      const Eigen::VectorXd lam = barycentric(basis, x);
      const int negatives = static_cast<int>((lam.array() < -1e-10).count());
      if (negatives == 1) return x;
    }
  }
  return std::nullopt;
}

}  // namespace ballinterp
