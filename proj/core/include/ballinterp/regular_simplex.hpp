#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ballinterp/geometry.hpp"

namespace ballinterp {

// Everything the closed form yields for the regular simplex inscribed in its
// circumscribed ball in dimension n.
struct RegularReport {
  int n = 0;
  double t_minus = 0.0;   // left maximum of psi, (n+1)/2 - sqrt(n+1)/2
  double t_plus = 0.0;    // right maximum, (n+1)/2 + sqrt(n+1)/2
  long long a = 0;        // floor(t_minus), derived by exact integer reasoning
  double psi_a = 0.0;
  double psi_a_plus_1 = 0.0;
  double norm = 0.0;      // max(psi_a, psi_a_plus_1); exactly sqrt(n+1) when
                          // that root is an integer
  long long k_star = 0;   // arg max among {a, a+1} (ties -> a; n = 1 -> 1)
  double d_n = 0.0;       // sqrt(n+1) - norm
};

// Piecewise-linear upper envelope for d_n through the nodes n = m^2 - 2 and
// n = m^2; d_n <= l(n) with equality exactly at the nodes.
class SplineBound {
 public:
  SplineBound(long long n_from, long long n_to);

  long long n_from() const { return n_from_; }
  long long n_to() const { return n_to_; }
  const std::vector<std::pair<long long, double>>& nodes() const { return nodes_; }

  // l(n) at an integer n; throws SplineRangeError outside [n_from, n_to].
  double evaluate(long long n) const;

 private:
  long long n_from_;
  long long n_to_;
  std::vector<std::pair<long long, double>> nodes_;
};

// Standard regular simplex in R^n (n >= 2): vertices e_1..e_n and
// ((1-sqrt(n+1))/n) * ones.  All edges have length sqrt(2).
Simplex regular_simplex(int n);

// The two constants in the closed-form inverse of the regular vertex matrix:
// sigma = ((n-1)sqrt(n+1)+1)/n, tau = (sqrt(n+1)-1)/n.  The inverse is
// (1/sqrt(n+1)) * [sigma on the diagonal, -tau off it, -1 down the last
// column, tau across the last row, 1 in the corner].
std::pair<double, double> sigma_tau(int n);

// psi(t) = (2 sqrt(n) / (n+1)) sqrt(t(n+1-t)) + |1 - 2t/(n+1)| on [0, n+1].
// Throws DomainError outside the interval.
double psi(int n, double t);

struct CriticalPoints {
  double t_minus = 0.0;
  double t_plus = 0.0;
  long long a = 0;  // floor(t_minus)
};

// Maxima of psi and the integer floor a of the left one.  a is determined by
// comparing (n+1-2a)^2 against n+1 in integer arithmetic, not by flooring a
// float, so it is exact for all n.
CriticalPoints critical_points(int n);

// Closed-form projector norm of the regular simplex inscribed in its
// circumscribed ball: max(psi(a), psi(a+1)); n = 1 gives exactly 1.
RegularReport regular_norm(int n);

// True when sqrt(n+1) is an integer >= 2, i.e. n = m^2 - 1 (n = 1 is false:
// the norm there is 1 < sqrt(2)).  These are exactly the dimensions where the
// norm attains the upper bound sqrt(n+1).
bool is_sqrt_integer_dimension(long long n);

// Builds the envelope covering [n_from, n_to]; requires n_from >= 23 (the
// first node) and n_from <= n_to.
SplineBound spline_bound(long long n_from, long long n_to);

// Reports for a list of dimensions (the regular-table surface).
std::vector<RegularReport> regular_reports(const std::vector<int>& dims);

}  // namespace ballinterp
