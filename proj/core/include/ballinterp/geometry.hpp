#pragma once

#include <Eigen/Core>
#include <vector>

#include "ballinterp/errors.hpp"

namespace ballinterp {

using Point = Eigen::VectorXd;

// Closed Euclidean ball B(center, radius), radius > 0.
class Ball {
 public:
  Ball(Point center, double radius);

  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  int dimension() const { return static_cast<int>(center_.size()); }

 private:
  Point center_;
  double radius_;
};

// n-dimensional simplex given by its n+1 vertices.  Construction validates
// shape and finiteness only; nondegeneracy is checked where an inverse is
// actually needed (lagrange_basis), so callers can still inspect or serialize
// flat simplices.
class Simplex {
 public:
  explicit Simplex(std::vector<Point> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Point& vertex(int j) const { return vertices_[static_cast<std::size_t>(j)]; }
  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  std::vector<Point> vertices_;
};

// (n+1)x(n+1) matrix whose row j is vertex j followed by a trailing 1.
using VertexMatrix = Eigen::MatrixXd;

// Coefficients of the basic Lagrange polynomials: coeffs() is the inverse of
// the vertex matrix, and column j holds lambda_j as
//   lambda_j(x) = l_{1j} x_1 + ... + l_{nj} x_n + l_{n+1,j}.
// lambda_j(vertex k) = delta_jk, and the lambda_j sum to 1 everywhere.
class LagrangeBasis {
 public:
  LagrangeBasis(Eigen::MatrixXd coeffs, double vertex_matrix_determinant);

  int dimension() const { return static_cast<int>(coeffs_.rows()) - 1; }
  const Eigen::MatrixXd& coeffs() const { return coeffs_; }

  // Gradient of lambda_j: the first n entries of column j.
  Eigen::VectorXd gradient(int j) const { return coeffs_.col(j).head(dimension()); }
  // Constant term of lambda_j.
  double constant(int j) const { return coeffs_(dimension(), j); }
  // Determinant of the vertex matrix the basis was derived from.
  double vertex_matrix_determinant() const { return det_; }

 private:
  Eigen::MatrixXd coeffs_;
  double det_;
};

VertexMatrix vertex_matrix(const Simplex& s);

// det of the vertex matrix (partially pivoted LU).
double vertex_matrix_determinant(const Simplex& s);

// Inverts the vertex matrix.  Throws DegenerateSimplexError (carrying the
// computed determinant) when the matrix is singular to working precision:
// reciprocal condition estimate below 1e-12.  The test is scale-invariant
// (a sliver keeps its conditioning when blown up) and stays meaningful in
// high dimension, where the determinant magnitude alone says little.
LagrangeBasis lagrange_basis(const Simplex& s);

// Barycentric coordinates of x: (lambda_1(x), ..., lambda_{n+1}(x)).
// Components sum to 1; negative entries mean x lies outside the simplex.
Eigen::VectorXd barycentric(const LagrangeBasis& basis, const Point& x);

// Arithmetic mean of the vertices.
Point centroid(const Simplex& s);

// Ball circumscribed around the standard regular simplex in R^n
// (vertices e_1..e_n plus ((1-sqrt(n+1))/n, ..., ...); for n = 1 the segment
// [0,1]): center ((1-sqrt(1/(n+1)))/n)*ones, radius sqrt(n/(n+1)).
Ball circumscribed_ball_regular(int n);

}  // namespace ballinterp
