#include "ballinterp/minimize.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "ballinterp/projector_norm.hpp"
#include "ballinterp/regular_simplex.hpp"
#include "ballinterp/rng.hpp"

namespace ballinterp {

void SearchConfig::validate() const {
  std::ostringstream msg;
  if (n < 1) {
    msg << "search dimension must be >= 1, got " << n;
  } else if (n + 1 > 26) {
    msg << "search dimension " << n << " exceeds the exact-norm enumeration cap (n <= 25)";
  } else if (restarts < 1) {
    msg << "restarts must be >= 1, got " << restarts;
  } else if (max_iterations < 1) {
    msg << "max_iterations must be >= 1, got " << max_iterations;
  } else if (!(initial_step > 0.0)) {
    msg << "initial_step must be positive, got " << initial_step;
  } else if (!(step_decay > 0.0 && step_decay < 1.0)) {
    msg << "step_decay must lie in (0, 1), got " << step_decay;
  } else if (!(tolerance > 0.0)) {
    msg << "tolerance must be positive, got " << tolerance;
  } else if (!(degeneracy_eps > 0.0)) {
    msg << "degeneracy_eps must be positive, got " << degeneracy_eps;
  } else {
    return;
  }
  throw PreconditionError(msg.str());
}

Simplex center_regular_in_unit_ball(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (n == 1) {
    return Simplex({Point::Constant(1, -1.0), Point::Constant(1, 1.0)});
  }
  const Simplex reg = regular_simplex(n);
  const Ball circ = circumscribed_ball_regular(n);
  std::vector<Point> vertices;
  vertices.reserve(static_cast<std::size_t>(n) + 1);
  for (const Point& v : reg.vertices()) {
    vertices.push_back((v - circ.center()) / circ.radius());
  }
  return Simplex(std::move(vertices));
}

namespace {

// Spread of the pairwise vertex distances; zero exactly for a regular shape.
double regularity_defect_of(const std::vector<Point>& vertices) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const double d = (vertices[i] - vertices[j]).norm();
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return hi - lo;
}

// Objective with the degeneracy guard folded in; nullopt means "reject move".
std::optional<double> guarded_norm(const std::vector<Point>& vertices, const Ball& ball,
                                   double eps) {
  Simplex s(vertices);
  if (std::abs(vertex_matrix_determinant(s)) < eps) return std::nullopt;
  try {
    return projector_norm_value(s, ball);
  } catch (const DegenerateSimplexError&) {
    // The scale-aware basis threshold can be stricter than eps.
    return std::nullopt;
  }
}

}  // namespace

SearchResult minimize_norm(const SearchConfig& config) {
  config.validate();
  const int n = config.n;
  const Ball unit_ball(Point::Zero(n), 1.0);

  double best_value = std::numeric_limits<double>::infinity();
  std::vector<Point> best_vertices;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(config.restarts));

  for (int r = 0; r < config.restarts; ++r) {
    DetRng rng(config.seed, static_cast<std::uint64_t>(r));  // independent stream per restart

    std::vector<Point> current;
    std::optional<double> value;
    if (r == 0) {
      current = center_regular_in_unit_ball(n).vertices();
      value = guarded_norm(current, unit_ball, config.degeneracy_eps);
      if (!value) throw Error("internal error: regular seed rejected as degenerate");
    } else {
      for (int attempt = 0; attempt < 1000 && !value; ++attempt) {
        current.clear();
        for (int j = 0; j <= n; ++j) current.push_back(rng.sphere_direction(n));
        value = guarded_norm(current, unit_ball, config.degeneracy_eps);
      }
      if (!value) throw Error("internal error: could not draw a nondegenerate start");
    }

    double step = config.initial_step;
    for (int it = 0; it < config.max_iterations && step >= config.tolerance; ++it) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
      Point moved = current[static_cast<std::size_t>(j)] + step * rng.sphere_direction(n);
      step *= config.step_decay;
      const double len = moved.norm();
      if (len < 1e-12) continue;
      moved /= len;  // proposals stay on the unit sphere

      std::vector<Point> candidate = current;
      candidate[static_cast<std::size_t>(j)] = std::move(moved);
      const std::optional<double> cand = guarded_norm(candidate, unit_ball, config.degeneracy_eps);
      if (cand && *cand < *value) {  // strict descent keeps the trace monotone
        value = cand;
        current = std::move(candidate);
      }
    }

    history.push_back(*value);
    if (*value < best_value) {  // strict '<': ties go to the lowest restart index
      best_value = *value;
      best_vertices = current;
    }
  }

  const double defect = regularity_defect_of(best_vertices);
  return SearchResult{best_value, Simplex(std::move(best_vertices)), std::move(history), defect};
}

}  // namespace ballinterp
