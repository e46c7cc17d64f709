#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hg/hypergroup.hpp"

namespace hg::validation {

// Every check reports its violations exhaustively, in lexicographic index
// order, with exact rational data. An empty list means the check passed.

struct UnitViolation {
  int i, j;  // offending unit-row position
  bool operator==(const UnitViolation&) const = default;
};

struct StochasticViolation {
  enum class Kind { kNegativeEntry, kBadRowSum };
  int i, j;
  Kind kind;
  int k;           // entry index for kNegativeEntry, -1 otherwise
  Rational value;  // the negative entry or the row sum
  bool operator==(const StochasticViolation&) const = default;
};

struct StarCompatViolation {
  int i, j, k;  // m[i][j][k] != m[star(j)][star(i)][star(k)]
  bool operator==(const StarCompatViolation&) const = default;
};

struct SupportViolation {
  int i, j;  // support condition at c_0 fails for delta_i o delta_j
  bool operator==(const SupportViolation&) const = default;
};

struct AssociativityViolation {
  int i, j, k;
  Rational max_residual;  // max_l |((d_i o d_j) o d_k - d_i o (d_j o d_k))_l|
  bool operator==(const AssociativityViolation&) const = default;
};

template <class V>
struct Check {
  std::vector<V> violations;
  bool ok() const { return violations.empty(); }
};

Check<UnitViolation> check_unit(const Hypergroup& h);
Check<StochasticViolation> check_stochastic(const Hypergroup& h);
Check<StarCompatViolation> check_star_compat(const Hypergroup& h);
Check<SupportViolation> check_support(const Hypergroup& h);
Check<AssociativityViolation> check_associativity(const Hypergroup& h);

// Non-commuting pair with rows m[i][j][.] != m[j][i][.], reported at the
// greatest pair (i,j), i < j, in lexicographic order; on the order-5 family
// this is the starred pair (3,4) whose delta_1 coefficients are r and s.
std::optional<std::pair<int, int>> commutativity_witness(const Hypergroup& h);

struct ValidationReport {
  bool unit_ok = false;
  std::vector<StochasticViolation> stochastic_violations;
  std::vector<StarCompatViolation> star_compat_violations;
  std::vector<SupportViolation> support_violations;
  std::vector<AssociativityViolation> associativity_violations;
  std::optional<std::pair<int, int>> commutativity_witness;
  bool overall = false;  // all axioms pass; the witness does not affect it
};

ValidationReport validate(const Hypergroup& h);

// Equalities that hold on every valid hypergroup and are re-checked here
// directly on the tensor:
//   kWeightSymmetry   m[i][i*][0] == m[i*][i][0]
//   kStarExchange     m[i][j][i*] == m[j][i][i*]
//   kStarShift        m[i][j][i]  == m[j][i*][i*]
//   kTripleRotation   m[i][j][k*] == m[j][k][i*], checked only when all the
//                     diagonal c_0 coefficients m[i][i*][0] (i >= 1) agree.
struct IdentityViolation {
  enum class Family { kWeightSymmetry, kStarExchange, kStarShift, kTripleRotation };
  Family family;
  int i, j, k;  // k is -1 for the pairwise families
  Rational lhs, rhs;
  bool operator==(const IdentityViolation&) const = default;
};

Check<IdentityViolation> check_derived_identities(const Hypergroup& h);

}  // namespace hg::validation
