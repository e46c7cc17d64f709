#include <doctest.h>

#include <map>
#include <random>

#include "hg/families.hpp"
#include "hg/symbolic.hpp"
#include "test_support.hpp"

using namespace hg;
using namespace hg::symbolic;
using hgtest::q;

namespace {

BivariatePoly random_poly(std::mt19937_64& rng) {
  BivariatePoly p;
  for (int dr = 0; dr <= 2; ++dr) {
    for (int ds = 0; ds <= 2 - dr; ++ds) {
      BivariatePoly term(hgtest::random_rational(rng, 6, 5));
      for (int a = 0; a < dr; ++a) term = term * BivariatePoly::var_r();
      for (int b = 0; b < ds; ++b) term = term * BivariatePoly::var_s();
      p += term;
    }
  }
  return p;
}

// Expected classification per catalogued triple, coefficient indices 0..4:
// Z = identically zero, C = nonzero rational multiple of the conic. Derived
// by expanding each coefficient equation by hand before freezing it here.
const std::map<std::array<int, 3>, std::array<char, 5>> kExpected = {
    {{1, 1, 1}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
    {{1, 1, 2}, {'Z', 'Z', 'C', 'C', 'C'}},
    {{1, 1, 3}, {'Z', 'Z', 'C', 'C', 'C'}},
    {{1, 2, 1}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
    {{1, 2, 3}, {'Z', 'C', 'Z', 'C', 'Z'}},
    {{1, 3, 1}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
    {{1, 3, 2}, {'Z', 'C', 'C', 'Z', 'Z'}},
    {{1, 3, 3}, {'Z', 'C', 'Z', 'C', 'Z'}},
    {{1, 3, 4}, {'Z', 'C', 'C', 'C', 'Z'}},
    {{3, 1, 3}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
    {{3, 1, 4}, {'Z', 'Z', 'Z', 'C', 'C'}},
    {{3, 3, 3}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
    {{3, 3, 4}, {'Z', 'C', 'C', 'C', 'Z'}},
    {{3, 4, 3}, {'Z', 'Z', 'Z', 'Z', 'Z'}},
};

}  // namespace

TEST_CASE("polynomial ring laws") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const BivariatePoly a = random_poly(rng);
    const BivariatePoly b = random_poly(rng);
    const BivariatePoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + BivariatePoly() == a);
    CHECK(a * BivariatePoly(1) == a);
    CHECK((a * BivariatePoly()).is_zero());

    // Evaluation is a ring homomorphism.
    const Rational r = hgtest::random_rational(rng);
    const Rational s = hgtest::random_rational(rng);
    CHECK((a * b + c).evaluate(r, s) == a.evaluate(r, s) * b.evaluate(r, s) + c.evaluate(r, s));
  }
}

TEST_CASE("parameter substitution") {
  const BivariatePoly r = BivariatePoly::var_r();
  const BivariatePoly s = BivariatePoly::var_s();

  CHECK(substitute_params("p") == BivariatePoly(2) - Rational(4) * r - Rational(4) * s);
  CHECK(substitute_params("y") ==
        Rational(5, 2) * r + Rational(5, 2) * s - BivariatePoly(1));
  CHECK(substitute_params("r") == r);
  CHECK_THROWS_AS(substitute_params("z"), std::invalid_argument);

  // Exact agreement with the rational-side derived parameters.
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational rv = hgtest::random_rational(rng);
    const Rational sv = hgtest::random_rational(rng);
    const families::FamilyParams f = families::derived_params(rv, sv);
    CHECK(substitute_params("p").evaluate(rv, sv) == f.p);
    CHECK(substitute_params("q").evaluate(rv, sv) == f.q);
    CHECK(substitute_params("u").evaluate(rv, sv) == f.u);
    CHECK(substitute_params("v").evaluate(rv, sv) == f.v);
    CHECK(substitute_params("w").evaluate(rv, sv) == f.w);
    CHECK(substitute_params("x").evaluate(rv, sv) == f.x);
    CHECK(substitute_params("y").evaluate(rv, sv) == f.y);
  }
}

TEST_CASE("pinned identity residuals") {
  // (d1 o d1) o d2 vs d1 o (d1 o d2), delta_2 coefficient:
  // p + 2yq - v^2 - w^2 expands to exactly F/2. The independent expansion
  // below follows the sigma = r + s route.
  const BivariatePoly residual = identity_residual({{1, 1, 2}, 2});
  CHECK(residual == Rational(1, 2) * conic_poly());

  const BivariatePoly r = BivariatePoly::var_r();
  const BivariatePoly s = BivariatePoly::var_s();
  const BivariatePoly sigma = r + s;
  const BivariatePoly lhs = BivariatePoly(2) - Rational(5) * sigma +
                            Rational(5, 2) * (sigma * sigma);
  const BivariatePoly rhs =
      BivariatePoly(Rational(1, 2)) - sigma + r * r + s * s;
  CHECK(residual == lhs - rhs);

  CHECK(identity_residual({{1, 1, 3}, 1}).is_zero());
  CHECK(identity_residual({{3, 4, 3}, 1}).is_zero());

  CHECK_THROWS_AS(identity_residual({{1, 4, 1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(identity_residual({{1, 1, 1}, 5}), std::invalid_argument);
}

TEST_CASE("residual classification") {
  CHECK(classify_residual(BivariatePoly()).always_zero());

  const auto half_f = classify_residual(Rational(1, 2) * conic_poly());
  CHECK(half_f.conic_multiple());
  CHECK(half_f.cofactor == q(1, 2));

  const auto minus_f = classify_residual(Rational(-3) * conic_poly());
  CHECK(minus_f.conic_multiple());
  CHECK(minus_f.cofactor == q(-3));

  CHECK(classify_residual(BivariatePoly::var_r()).kind ==
        Classification::Kind::kOther);

  const BivariatePoly cubic =
      BivariatePoly::var_r() * BivariatePoly::var_r() * BivariatePoly::var_r();
  CHECK_THROWS_AS(classify_residual(cubic), std::invalid_argument);
}

TEST_CASE("identity catalog certification") {
  const CatalogReport report = verify_catalog();
  CHECK(report.all_certified);
  CHECK(report.entries.size() == 14 * 5);

  for (const auto& entry : report.entries) {
    const auto it = kExpected.find(entry.id.triple);
    REQUIRE(it != kExpected.end());
    const char expected = it->second[entry.id.coefficient_index];
    if (expected == 'Z') {
      CHECK_MESSAGE(entry.classification.always_zero(),
                    "triple (", entry.id.triple[0], ",", entry.id.triple[1], ",",
                    entry.id.triple[2], ") coeff ", entry.id.coefficient_index);
    } else {
      CHECK_MESSAGE(entry.classification.conic_multiple(),
                    "triple (", entry.id.triple[0], ",", entry.id.triple[1], ",",
                    entry.id.triple[2], ") coeff ", entry.id.coefficient_index);
      CHECK(entry.classification.cofactor != 0);
    }
  }
}

TEST_CASE("symbolic residuals match exact tensor arithmetic") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    // Any rational point, in the region or not: the residual identity is
    // polynomial.
    const Rational r = hgtest::random_rational(rng, 8, 9);
    const Rational s = hgtest::random_rational(rng, 8, 9);
    const Hypergroup h = families::family_table(r, s);
    for (const auto& triple : catalog_triples()) {
      const auto [i, j, k] = triple;
      for (int l = 0; l < 5; ++l) {
        Rational direct(0);
        for (int t = 0; t < 5; ++t) {
          direct += h.at(i, j, t) * h.at(t, k, l) - h.at(j, k, t) * h.at(i, t, l);
        }
        CHECK(identity_residual({triple, l}).evaluate(r, s) == direct);
      }
    }
  }
}

TEST_CASE("rotation identity holds symbolically on the family table") {
  const auto& table = symbolic_family_table();
  const int star[5] = {0, 1, 2, 4, 3};
  auto at = [&table](int i, int j, int k) -> const BivariatePoly& {
    return table[(static_cast<size_t>(i) * 5 + j) * 5 + k];
  };
  for (int i = 1; i < 5; ++i) {
    for (int j = 1; j < 5; ++j) {
      for (int k = 1; k < 5; ++k) {
        CHECK(at(i, j, star[k]) == at(j, k, star[i]));
      }
    }
  }
}
