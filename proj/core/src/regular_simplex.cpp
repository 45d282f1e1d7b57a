#include "ballinterp/regular_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace ballinterp {

Simplex regular_simplex(int n) {
  if (n < 2) throw DomainError("regular_simplex requires n >= 2 (n = 1 is the segment [0,1])");
  std::vector<Point> vertices;
  vertices.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    Point e = Point::Zero(n);
    e[i] = 1.0;
    vertices.push_back(std::move(e));
  }
  vertices.push_back(Point::Constant(n, (1.0 - std::sqrt(n + 1.0)) / n));
  return Simplex(std::move(vertices));
}

std::pair<double, double> sigma_tau(int n) {
  if (n < 2) throw DomainError("sigma_tau requires n >= 2");
  const double root = std::sqrt(n + 1.0);
  return {((n - 1) * root + 1.0) / n, (root - 1.0) / n};
}

double psi(int n, double t) {
  if (n < 1) throw DomainError("psi requires n >= 1");
  if (!(t >= 0.0 && t <= n + 1.0)) {
    std::ostringstream msg;
    msg << "psi argument " << t << " outside [0, " << n + 1 << "]";
    throw DomainError(msg.str());
  }
  return 2.0 * std::sqrt(static_cast<double>(n)) / (n + 1.0) * std::sqrt(t * (n + 1.0 - t)) +
         std::abs(1.0 - 2.0 * t / (n + 1.0));
}

CriticalPoints critical_points(int n) {
  if (n < 1) throw DomainError("critical_points requires n >= 1");
  const double root = std::sqrt(n + 1.0);
  CriticalPoints cp;
  cp.t_minus = (n + 1.0 - root) / 2.0;
  cp.t_plus = (n + 1.0 + root) / 2.0;

  // a = floor(t_minus) without float flooring:
  //   a <= t_minus  <=>  n+1-2a >= sqrt(n+1)  <=>  (n+1-2a)^2 >= n+1.
  const auto at_most_t_minus = [n](long long cand) {
    if (cand < 0) return true;
    const long long w = static_cast<long long>(n) + 1 - 2 * cand;
    return w >= 0 && w * w >= static_cast<long long>(n) + 1;
  };
  long long a = static_cast<long long>(std::floor(cp.t_minus));
  while (!at_most_t_minus(a)) --a;
  while (at_most_t_minus(a + 1)) ++a;
  cp.a = std::max(a, 0ll);
  return cp;
}

bool is_sqrt_integer_dimension(long long n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  const long long m = std::llround(std::sqrt(static_cast<double>(n + 1)));
  return m >= 2 && m * m == n + 1;
}

RegularReport regular_norm(int n) {
  if (n < 1) throw DomainError("regular_norm requires n >= 1");
  const CriticalPoints cp = critical_points(n);
  RegularReport r;
  r.n = n;
  r.t_minus = cp.t_minus;
  r.t_plus = cp.t_plus;
  r.a = cp.a;

  if (n == 1) {
    // psi(0) = psi(1) = 1; the only admissible sign class has k = 1.
    r.psi_a = 1.0;
    r.psi_a_plus_1 = 1.0;
    r.norm = 1.0;
    r.k_star = 1;
    r.d_n = std::sqrt(2.0) - 1.0;
    return r;
  }

  r.psi_a_plus_1 = psi(n, static_cast<double>(cp.a + 1));
  if (is_sqrt_integer_dimension(n)) {
    // t_minus is itself the integer a, and psi(t_minus) = sqrt(n+1) = m is an
    // integer; evaluate it algebraically so d_n is exactly zero here.
    r.psi_a = static_cast<double>(std::llround(std::sqrt(n + 1.0)));
    r.norm = r.psi_a;
    r.k_star = cp.a;
    r.d_n = 0.0;
    return r;
  }

  r.psi_a = psi(n, static_cast<double>(cp.a));
  if (r.psi_a >= r.psi_a_plus_1) {
    r.norm = r.psi_a;
    r.k_star = cp.a;
  } else {
    r.norm = r.psi_a_plus_1;
    r.k_star = cp.a + 1;
  }
  r.d_n = std::sqrt(n + 1.0) - r.norm;
  return r;
}

SplineBound::SplineBound(long long n_from, long long n_to) : n_from_(n_from), n_to_(n_to) {
  if (n_from < 23) {
    std::ostringstream msg;
    msg << "spline nodes start at n = 23 (m = 5); requested range begins at " << n_from;
    throw SplineRangeError(msg.str());
  }
  if (n_to < n_from) throw SplineRangeError("empty spline range");
  for (long long m = 5;; ++m) {
    nodes_.emplace_back(m * m - 2, regular_norm(static_cast<int>(m * m - 2)).d_n);
    nodes_.emplace_back(m * m, regular_norm(static_cast<int>(m * m)).d_n);
    if (m * m >= n_to) break;
  }
}

double SplineBound::evaluate(long long n) const {
  if (n < n_from_ || n > n_to_) {
    std::ostringstream msg;
    msg << "n = " << n << " outside the covered range [" << n_from_ << ", " << n_to_ << "]";
    throw SplineRangeError(msg.str());
  }
  const auto after = std::upper_bound(nodes_.begin(), nodes_.end(), n,
                                      [](long long v, const auto& node) { return v < node.first; });
  if (after == nodes_.begin()) throw SplineRangeError("n precedes the first spline node");
  const auto& [n1, d1] = *std::prev(after);
  if (n == n1 || after == nodes_.end()) return d1;
  const auto& [n2, d2] = *after;
  const double w = static_cast<double>(n - n1) / static_cast<double>(n2 - n1);
  return d1 + w * (d2 - d1);
}

SplineBound spline_bound(long long n_from, long long n_to) { return SplineBound(n_from, n_to); }

std::vector<RegularReport> regular_reports(const std::vector<int>& dims) {
  std::vector<RegularReport> out;
  out.reserve(dims.size());
  for (int n : dims) out.push_back(regular_norm(n));
  return out;
}

}  // namespace ballinterp
