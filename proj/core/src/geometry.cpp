#include "ballinterp/geometry.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>
#include <utility>

namespace ballinterp {

Ball::Ball(Point center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.size() < 1 || !center_.allFinite()) {
    throw DomainError("ball center must be a non-empty finite vector");
  }
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    std::ostringstream msg;
    msg << "ball radius must be positive and finite, got " << radius_;
    throw DomainError(msg.str());
  }
}

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw MalformedSimplexError("a simplex needs at least 2 vertices");
  }
  const auto n = static_cast<Eigen::Index>(vertices_.size()) - 1;
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (vertices_[j].size() != n) {
      std::ostringstream msg;
      msg << "vertex " << j << " has dimension " << vertices_[j].size() << ", expected " << n
          << " for " << vertices_.size() << " vertices";
      throw MalformedSimplexError(msg.str());
    }
    if (!vertices_[j].allFinite()) {
      std::ostringstream msg;
      msg << "vertex " << j << " has non-finite coordinates";
      throw MalformedSimplexError(msg.str());
    }
  }
}

LagrangeBasis::LagrangeBasis(Eigen::MatrixXd coeffs, double vertex_matrix_determinant)
    : coeffs_(std::move(coeffs)), det_(vertex_matrix_determinant) {
  if (coeffs_.rows() != coeffs_.cols() || coeffs_.rows() < 2) {
    throw DimensionMismatchError("Lagrange coefficient matrix must be square, size >= 2");
  }
}

VertexMatrix vertex_matrix(const Simplex& s) {
  const int n = s.dimension();
  VertexMatrix a(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    a.row(j).head(n) = s.vertex(j).transpose();
    a(j, n) = 1.0;
  }
  return a;
}

double vertex_matrix_determinant(const Simplex& s) {
  return Eigen::PartialPivLU<Eigen::MatrixXd>(vertex_matrix(s)).determinant();
}

namespace {

// Simplices whose vertex matrix is conditioned worse than this are rejected.
// Conditioning, unlike the raw determinant, is scale-invariant and does not
// shrink with dimension for well-shaped simplices.
constexpr double kDegenerateRcond = 1e-12;

}  // namespace

LagrangeBasis lagrange_basis(const Simplex& s) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(vertex_matrix(s));
  const double det = lu.determinant();
  const double rcond = lu.rcond();
  if (det == 0.0 || !std::isfinite(det) || rcond < kDegenerateRcond) {
    std::ostringstream msg;
    msg << "degenerate simplex: reciprocal condition estimate " << rcond << " is below "
        << kDegenerateRcond << " (|det A| = " << std::abs(det) << ")";
    throw DegenerateSimplexError(msg.str(), det);
  }
  return LagrangeBasis(lu.inverse(), det);
}

Eigen::VectorXd barycentric(const LagrangeBasis& basis, const Point& x) {
  const int n = basis.dimension();
  if (x.size() != n) {
    std::ostringstream msg;
    msg << "point has dimension " << x.size() << ", basis expects " << n;
    throw DimensionMismatchError(msg.str());
  }
  return basis.coeffs().topRows(n).transpose() * x + basis.coeffs().row(n).transpose();
}

Point centroid(const Simplex& s) {
  Point c = Point::Zero(s.dimension());
  for (const Point& v : s.vertices()) c += v;
  return c / s.vertex_count();
}

Ball circumscribed_ball_regular(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (n == 1) return Ball(Point::Constant(1, 0.5), 0.5);
  const double coord = (1.0 - std::sqrt(1.0 / (n + 1.0))) / n;
  return Ball(Point::Constant(n, coord), std::sqrt(n / (n + 1.0)));
}

}  // namespace ballinterp
