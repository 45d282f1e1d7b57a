#pragma once

#include <Eigen/Core>

#include "ballinterp/geometry.hpp"

namespace ballinterp {

// xi = min{ sigma >= 1 : ball is contained in the simplex dilated by sigma
// about its centroid }.
struct AbsorptionResult {
  double xi = 1.0;
  int binding_face = 0;          // face whose margin constraint decides xi
  Eigen::VectorXd face_margins;  // min over the ball of lambda_j, per face
};

// Closed form: a dilation by sigma shifts every barycentric coordinate by
// (1-sigma)/(n+1), and the minimum of the linear lambda_j over the ball is
// lambda_j(center) - R ||grad lambda_j||, so
//   xi = max(1, max_j [1 + (n+1)(R ||g_j|| - lambda_j(center))]).
// Cross-validated against a bisection + sphere-sampling containment oracle in
// the test suite before anything else relies on it.
AbsorptionResult absorption_index_ball(const Simplex& s, const Ball& ball);

// Two-sided bound linking the absorption index and the projector norm:
//   (n+1)/(2n) (norm-1) + 1  <=  xi  <=  (n+1)/2 (norm-1) + 1,
// checked with 1e-9 slack on both sides.
bool sandwich_check(double norm, double xi, int n);

// 3 - 4/(n+1): the minimal projector norm over simplices inscribed in a ball
// for n <= 4, and a strict lower bound from dimension 5 on.
double theta_lower_bound(int n);

}  // namespace ballinterp
