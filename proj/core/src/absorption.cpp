#include "ballinterp/absorption.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ballinterp {

AbsorptionResult absorption_index_ball(const Simplex& s, const Ball& ball) {
  if (s.dimension() != ball.dimension()) {
    std::ostringstream msg;
    msg << "simplex dimension " << s.dimension() << " does not match ball dimension "
        << ball.dimension();
    throw DimensionMismatchError(msg.str());
  }
  const LagrangeBasis basis = lagrange_basis(s);
  const int n = s.dimension();
  const Eigen::VectorXd lam_center = barycentric(basis, ball.center());

  AbsorptionResult out;
  out.face_margins.resize(n + 1);
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= n; ++j) {
    // The linear lambda_j attains its minimum over the ball at
    // center - R g_j/||g_j||; containment in the sigma-dilation asks
    // lambda_j >= (1-sigma)/(n+1) there.
    const double margin = lam_center[j] - ball.radius() * basis.gradient(j).norm();
    out.face_margins[j] = margin;
    const double sigma_j = 1.0 - (n + 1) * margin;
    if (sigma_j > worst) {
      worst = sigma_j;
      out.binding_face = j;
    }
  }
  out.xi = std::max(1.0, worst);
  return out;
}

bool sandwich_check(double norm, double xi, int n) {
  if (n < 1) throw DomainError("sandwich_check requires n >= 1");
  const double lower = (n + 1.0) / (2.0 * n) * (norm - 1.0) + 1.0;
  const double upper = (n + 1.0) / 2.0 * (norm - 1.0) + 1.0;
  return lower - 1e-9 <= xi && xi <= upper + 1e-9;
}

double theta_lower_bound(int n) {
  if (n < 1) throw DomainError("theta_lower_bound requires n >= 1");
  return 3.0 - 4.0 / (n + 1.0);
}

}  // namespace ballinterp
