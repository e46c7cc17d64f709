#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hg/rational.hpp"

namespace hg::symbolic {

// Exact polynomial in the two family variables r and s, kept in canonical
// form: a map from (deg_r, deg_s) to a nonzero rational coefficient.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& constant);
  explicit BivariatePoly(long constant) : BivariatePoly(Rational(constant)) {}

  static BivariatePoly var_r();
  static BivariatePoly var_s();

  bool is_zero() const { return coeffs_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  Rational coeff(int deg_r, int deg_s) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return coeffs_; }

  Rational evaluate(const Rational& r, const Rational& s) const;
  std::string to_string() const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b);
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& c, const BivariatePoly& p);
  friend BivariatePoly operator-(const BivariatePoly& p);

  bool operator==(const BivariatePoly& other) const = default;

 private:
  void add_term(int deg_r, int deg_s, const Rational& c);
  std::map<std::pair<int, int>, Rational> coeffs_;
};

// The family parameters as polynomials in (r, s); symbol is one of
// p, q, r, s, u, v, w, x, y.
BivariatePoly substitute_params(std::string_view symbol);

// F(r, s) = 3r^2 + 10rs + 3s^2 - 8r - 8s + 3.
BivariatePoly conic_poly();

// The order-5 family tensor with polynomial entries, flat 5x5x5.
const std::vector<BivariatePoly>& symbolic_family_table();

// The fourteen associativity triples that remain after the symmetry
// reductions, in the order they are catalogued.
const std::array<std::array<int, 3>, 14>& catalog_triples();

// One coefficient equation of one catalogued triple.
struct IdentityId {
  std::array<int, 3> triple;  // must be one of catalog_triples()
  int coefficient_index;      // 0..4, which delta_m coefficient
};

// LHS - RHS of the named coefficient equation, fully expanded:
// sum_t (m[i][j][t] m[t][k][l] - m[j][k][t] m[i][t][l]) as a polynomial.
BivariatePoly identity_residual(const IdentityId& id);

struct Classification {
  enum class Kind { kAlwaysZero, kConicMultiple, kOther };
  Kind kind;
  Rational cofactor;  // residual == cofactor * F when kConicMultiple

  bool always_zero() const { return kind == Kind::kAlwaysZero; }
  bool conic_multiple() const { return kind == Kind::kConicMultiple; }
};

// Decides, by coefficient-wise comparison, whether a residual of degree <= 2
// is identically zero or an exact rational multiple of the conic. Degree > 2
// means the catalog's shape assumption broke; that is an error, not a case.
Classification classify_residual(const BivariatePoly& p);

struct CatalogEntry {
  IdentityId id;
  BivariatePoly residual;
  Classification classification;
};

struct CatalogReport {
  std::vector<CatalogEntry> entries;  // 14 triples x 5 coefficients
  bool all_certified;                  // no entry classified Other
};

// Certifies the whole identity catalog: every coefficient equation of every
// catalogued triple is either identically zero or a rational multiple of F.
CatalogReport verify_catalog();

}  // namespace hg::symbolic
