// Test-side reference implementations.  These deliberately avoid the library's
// solver paths: inverses come from a hand-rolled Gauss-Jordan elimination,
// determinants from cofactor expansion, and norms / absorption indices from
// direct sampling of the definitions.  Eigen is used as a container only.
#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/QR>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ballinterp/geometry.hpp"
#include "ballinterp/rng.hpp"

namespace oracles {

using ballinterp::Ball;
using ballinterp::DetRng;
using ballinterp::Point;
using ballinterp::Simplex;

// Vertex matrix assembled by hand (rows = vertices, trailing 1).
inline Eigen::MatrixXd manual_vertex_matrix(const Simplex& s) {
  const int n = s.dimension();
  Eigen::MatrixXd a(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < n; ++i) a(j, i) = s.vertex(j)[i];
    a(j, n) = 1.0;
  }
  return a;
}

// Gauss-Jordan with partial pivoting, written out longhand.
inline Eigen::MatrixXd ge_inverse(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("ge_inverse: square matrix required");
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    }
    if (std::abs(a(piv, col)) < 1e-300) throw std::runtime_error("ge_inverse: singular matrix");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const double d = a(col, col);
    a.row(col) /= d;
    inv.row(col) /= d;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

// Recursive cofactor expansion along the first row.
inline double cofactor_determinant(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return a(0, 0);
  double det = 0.0;
  double sign = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    det += sign * a(0, j) * cofactor_determinant(minor);
    sign = -sign;
  }
  return det;
}

// Barycentric coordinates of x computed from the hand-rolled inverse.
inline Eigen::VectorXd manual_barycentric(const Eigen::MatrixXd& inv, const Point& x) {
  const Eigen::Index n = inv.rows() - 1;
  Eigen::VectorXd hom(n + 1);
  hom.head(n) = x;
  hom[n] = 1.0;
  return inv.transpose() * hom;
}

// Direct evaluation of max_x sum_j |lambda_j(x)| over sampled sphere points.
inline double sampled_norm(const Simplex& s, const Ball& ball, std::int64_t samples,
                           std::uint64_t seed) {
  const Eigen::MatrixXd inv = ge_inverse(manual_vertex_matrix(s));
  DetRng rng(seed, 99);
  double best = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const Point x = ball.center() + ball.radius() * rng.sphere_direction(s.dimension());
    best = std::max(best, manual_barycentric(inv, x).cwiseAbs().sum());
  }
  return best;
}

// Norm from the sign-vector formula by plain exhaustive enumeration; with
// canonical_only the last sign is pinned to +1 (the global-flip quotient).
inline double brute_force_norm(const Simplex& s, const Ball& ball, bool canonical_only) {
  const int n = s.dimension();
  const Eigen::MatrixXd inv = ge_inverse(manual_vertex_matrix(s));
  const Eigen::MatrixXd grads = inv.topRows(n);
  const Eigen::VectorXd lam0 = manual_barycentric(inv, ball.center());
  const int free_slots = canonical_only ? n : n + 1;
  double best = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_slots); ++m) {
    Eigen::VectorXd f = Eigen::VectorXd::Ones(n + 1);
    for (int p = 0; p < free_slots; ++p) {
      if ((m >> p) & 1u) f[p] = -1.0;
    }
    const double value = ball.radius() * (grads * f).norm() + std::abs(lam0.dot(f));
    best = std::max(best, value);
  }
  return best;
}

// Minimal dilation factor sigma >= 1 with all sampled sphere points inside the
// sigma-dilated simplex, by bisection; the membership test rebuilds the
// dilated simplex and its own inverse at every probe.
inline double bisection_xi(const Simplex& s, const Ball& ball, std::int64_t samples,
                           std::uint64_t seed) {
  const int n = s.dimension();
  Eigen::MatrixXd x(n + 1, samples);
  DetRng rng(seed, 77);
  for (std::int64_t i = 0; i < samples; ++i) {
    x.col(i).head(n) = ball.center() + ball.radius() * rng.sphere_direction(n);
    x(n, i) = 1.0;
  }
  const Point c = ballinterp::centroid(s);

  const auto contains_all = [&](double sigma) {
    Eigen::MatrixXd a(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
      a.row(j).head(n) = (c + sigma * (s.vertex(j) - c)).transpose();
      a(j, n) = 1.0;
    }
    const Eigen::MatrixXd inv = ge_inverse(a);
    return (inv.transpose() * x).minCoeff() >= -1e-12;
  };

  if (contains_all(1.0)) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (!contains_all(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) throw std::runtime_error("bisection_xi: no containment up to 1e9");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (contains_all(mid) ? hi : lo) = mid;
  }
  return hi;
}

// --- random instance generators ---------------------------------------------

// Uniform point in a ball: direction times U^(1/n)-scaled radius.
inline Point random_point_in_ball(DetRng& rng, const Ball& ball) {
  const int n = ball.dimension();
  const double r = ball.radius() * std::pow(rng.uniform(), 1.0 / n);
  return ball.center() + r * rng.sphere_direction(n);
}

// Simplex with vertices uniform in the ball, redrawn until comfortably
// nondegenerate at the ball's scale.
inline Simplex random_simplex_in_ball(DetRng& rng, const Ball& ball, double min_det_scale = 1e-2) {
  const int n = ball.dimension();
  const double scale = std::pow(ball.radius(), n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> vertices;
    for (int j = 0; j <= n; ++j) vertices.push_back(random_point_in_ball(rng, ball));
    Simplex s(std::move(vertices));
    if (std::abs(ballinterp::vertex_matrix_determinant(s)) >= min_det_scale * scale) return s;
  }
  throw std::runtime_error("random_simplex_in_ball: rejection sampling failed");
}

// Simplex with vertices on the unit sphere and |det A| >= min_det.
inline Simplex random_inscribed_simplex(DetRng& rng, int n, double min_det) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> vertices;
    for (int j = 0; j <= n; ++j) vertices.push_back(rng.sphere_direction(n));
    Simplex s(std::move(vertices));
    if (std::abs(ballinterp::vertex_matrix_determinant(s)) >= min_det) return s;
  }
  throw std::runtime_error("random_inscribed_simplex: rejection sampling failed");
}

// Haar-ish random rotation: QR of a gaussian matrix, signs fixed, reflections
// folded away by flipping one column if needed.
inline Eigen::MatrixXd random_rotation(DetRng& rng, int n) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

// Applies x -> Q x + t to every vertex.
inline Simplex transform(const Simplex& s, const Eigen::MatrixXd& q, const Point& t) {
  std::vector<Point> vertices;
  for (const Point& v : s.vertices()) vertices.push_back(q * v + t);
  return Simplex(std::move(vertices));
}

}  // namespace oracles
