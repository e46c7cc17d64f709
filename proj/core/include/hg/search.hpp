#pragma once

#include <cstdint>
#include <vector>

#include "hg/hypergroup.hpp"
#include "hg/rational.hpp"

namespace hg::search {

struct SearchConfig {
  int order = 0;
  StarInvolution star;
  int restarts = 1;
  int max_iterations = 1500;
  double residual_tolerance = 1e-9;
  double commutativity_tolerance = 1e-7;
  std::uint64_t seed = 0;
};

struct Candidate {
  std::vector<double> tensor;  // flat order^3, same layout as Hypergroup
  double residual;
  double commutativity_defect;  // max_{i,j,k} |m[i][j][k] - m[j][i][k]|
  int restart;
};

// Sum of squared axiom violations of a float tensor: associativity
// residuals, row sums and negativity, the support pattern at c_0, star
// compatibility, and the unit rows. Zero exactly at the float image of a
// valid hypergroup.
double residual_objective(const std::vector<double>& tensor, int order,
                          const StarInvolution& star);

// Penalty-minimizing feasibility search. Each restart draws a random
// tensor that satisfies the unit rows, the support-pattern zeros and star
// compatibility by construction (free rows uniform on their simplices,
// restart k seeded with seed + k), then runs a projected spectral gradient
// descent on the associativity penalty, re-projecting the free rows onto
// their simplices after every step. Returns the candidates whose residual
// beats residual_tolerance, sorted by residual, ties by restart index.
std::vector<Candidate> feasibility_search(const SearchConfig& config);

struct RegionSample {
  Rational r, s;
  bool in_region;
  double conic_value;
  bool admissible;  // in_region and |F| < 3*step, decided exactly
};

// Grid sweep of [0, 1/2)^2 at the given step for figure reproduction.
std::vector<RegionSample> sample_region(const Rational& step);

}  // namespace hg::search
