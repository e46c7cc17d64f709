#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hg/hypergroup.hpp"
#include "hg/rational.hpp"

namespace hg::families {

// Derived parameters of the order-5 family at (r, s).
struct FamilyParams {
  Rational r, s;
  Rational p, q, u, v, w, x, y;
};

FamilyParams derived_params(const Rational& r, const Rational& s);

// Admissibility region: 0 <= r < 1/2, 0 <= s < 1/2, 2/5 <= r+s < 1/2.
// Boundary semantics are exactly these: left-closed at 0 and 2/5, open at 1/2.
bool in_region(const Rational& r, const Rational& s);

// If (r, s) violates the region, the violated inequality spelled out
// ("r + s = 1/2 violates r + s < 1/2"); empty string when in the region.
std::string region_violation(const Rational& r, const Rational& s);

// F(r, s) = 3r^2 + 10rs + 3s^2 - 8r - 8s + 3; the family's table is
// associative exactly when this vanishes.
Rational conic_value(const Rational& r, const Rational& s);

// Raw family table at (r, s): the structure equations transcribed with no
// admissibility check. Off-region tables are constructible on purpose (they
// are not hypergroups and the validator says so).
Hypergroup family_table(const Rational& r, const Rational& s);

// Region-checked constructor; throws std::domain_error naming the violated
// inequality. Does not require the conic: off-conic tables fail only
// associativity, which the negative tests rely on.
Hypergroup build_k_rs(const Rational& r, const Rational& s);

// One root of the conic in s for a fixed r: exact when the discriminant is
// a rational square, otherwise a bisection-certified enclosure [lo, hi]
// with hi - lo < the requested width and a sign change of F across it.
struct ConicSolution {
  bool exact;
  Rational value;  // set when exact
  Rational lo, hi; // equal to value when exact
};

std::vector<ConicSolution> conic_solutions_for_r(const Rational& r,
                                                 const Rational& width);

// Rational parameterization of the conic through its rational point
// (1/4, 1/4): the line of slope t meets the conic again at
// (1/4 + lambda, 1/4 + t*lambda) with lambda = 4(1+t)/((3t+1)(t+3)).
// Throws for t = -1/3 and t = -3 (degenerate direction).
std::pair<Rational, Rational> rational_point_from_slope(const Rational& t);

// Hypergroup of a finite group given its Cayley table (identity at 0):
// m[i][j][k] = [cayley[i][j] == k], star = inverse. Throws if the table is
// not a group.
Hypergroup group_hypergroup(const std::vector<std::vector<int>>& cayley);

// Reference Cayley tables.
std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> klein_four_table();
std::vector<std::vector<int>> symmetric_group_3_table();

// All involutions of {0..order-1} fixing 0, in lexicographic order, with the
// number of relabeling classes (involutions with the same number of 2-cycles
// are conjugate under permutations of {1..order-1}).
struct StarEnumeration {
  std::vector<StarInvolution> involutions;
  int class_count;
};

StarEnumeration enumerate_star_structures(int order);

}  // namespace hg::families
