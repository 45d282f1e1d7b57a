#pragma once

#include <cstdint>
#include <vector>

#include "ballinterp/geometry.hpp"

namespace ballinterp {

// Configuration for the stochastic descent over simplices inscribed in the
// unit ball.  validate() throws PreconditionError on out-of-range values.
struct SearchConfig {
  int n = 2;
  int restarts = 8;
  int max_iterations = 5000;
  double initial_step = 0.3;
  double step_decay = 0.995;     // multiplicative, in (0,1)
  double tolerance = 1e-9;       // stop once the step shrinks below this
  std::uint64_t seed = 0;
  double degeneracy_eps = 1e-10; // reject moves with |det A| below this

  void validate() const;
};

struct SearchResult {
  double best_norm = 0.0;
  Simplex best_simplex;          // all vertices on the unit sphere
  std::vector<double> history;   // best value per restart
  double regularity_defect = 0.0;  // spread of pairwise vertex distances
};

// Regular simplex recentred at the origin and scaled to circumradius 1
// (n = 3: pairwise vertex inner products are exactly -1/3).  For n = 1 the
// pair {-1, +1}.
Simplex center_regular_in_unit_ball(int n);

// Minimizes the exact projector norm over the unit ball by random
// single-vertex spherical perturbations with multiplicative step decay.
// Restart 0 is seeded from the centred regular simplex, the rest from random
// inscribed simplices; restarts are independent streams merged by minimum
// (ties -> lowest restart index).  Deterministic for a fixed seed.
SearchResult minimize_norm(const SearchConfig& config);

}  // namespace ballinterp
