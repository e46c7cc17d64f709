#include <doctest.h>

#include <random>
#include <set>

#include "hg/families.hpp"
#include "hg/validate.hpp"
#include "test_support.hpp"

using namespace hg;
using namespace hg::families;
using hgtest::q;

TEST_CASE("derived parameters") {
  const FamilyParams at_pstar = derived_params(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(at_pstar.p == q(16, 117));
  CHECK(at_pstar.q == q(109, 468));
  CHECK(at_pstar.u == q(125, 468));
  CHECK(at_pstar.v == q(37, 468));
  CHECK(at_pstar.w == q(71, 156));
  CHECK(at_pstar.x == q(31, 156));
  CHECK(at_pstar.y == q(77, 468));

  const FamilyParams quarter = derived_params(q(1, 4), q(1, 4));
  CHECK(quarter.p == 0);
  for (const Rational* v : {&quarter.q, &quarter.u, &quarter.v, &quarter.w,
                            &quarter.x, &quarter.y}) {
    CHECK(*v == q(1, 4));
  }

  const FamilyParams origin = derived_params(q(0), q(0));
  CHECK(origin.p == 2);
  CHECK(origin.y == -1);
}

TEST_CASE("derived parameters satisfy the row-sum identities") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational r = hgtest::random_rational(rng);
    const Rational s = hgtest::random_rational(rng);
    const FamilyParams f = derived_params(r, s);
    CHECK(f.p + f.y + 3 * f.q == 1);
    CHECK(f.p + f.r + f.s + 2 * f.x == 1);
    CHECK(2 * f.q + f.v + f.w == 1);
    CHECK(f.q + f.v + f.r + f.u == 1);
    CHECK(f.q + f.w + f.u + f.s == 1);
    CHECK(3 * f.u + f.x == 1);
  }
}

TEST_CASE("admissibility region") {
  CHECK(in_region(q(1, 5), q(1, 4)));       // r+s = 9/20
  CHECK_FALSE(in_region(q(1, 4), q(1, 4))); // r+s = 1/2 excluded
  CHECK_FALSE(in_region(q(1, 10), q(1, 10)));
  CHECK(in_region(q(1, 5), q(1, 5)));       // r+s = 2/5 allowed (y = 0)
  CHECK(in_region(q(0), q(9, 20)));         // r = 0 allowed
  CHECK_FALSE(in_region(q(-1, 100), q(9, 20)));
  CHECK_FALSE(in_region(q(9, 20), q(1, 2)));

  CHECK(region_violation(q(1, 5), q(1, 4)).empty());
  CHECK(region_violation(q(1, 10), q(1, 10)) == "r + s = 1/5 violates 2/5 <= r + s");
  CHECK(region_violation(q(1, 4), q(1, 4)) == "r + s = 1/2 violates r + s < 1/2");
  CHECK(region_violation(q(-1, 100), q(9, 20)) == "r = -1/100 violates 0 <= r");
  CHECK(region_violation(q(1, 5), q(1, 2)) == "s = 1/2 violates s < 1/2");
}

TEST_CASE("conic values") {
  CHECK(conic_value(q(1, 4), q(1, 4)) == 0);
  CHECK(conic_value(hgtest::pstar_r(), hgtest::pstar_s()) == 0);
  CHECK(conic_value(q(0), q(0)) == 3);
  CHECK(conic_value(q(198, 468), q(7, 156)) != 0);

  // On the diagonal the conic reduces to 16r^2 - 16r + 3, so r = s happens
  // only at (1/4, 1/4) and (3/4, 3/4); both fall outside the region.
  CHECK(conic_value(q(3, 4), q(3, 4)) == 0);
  CHECK_FALSE(in_region(q(3, 4), q(3, 4)));
  CHECK_FALSE(in_region(q(1, 4), q(1, 4)));
}

TEST_CASE("family construction honors the region") {
  CHECK_NOTHROW(build_k_rs(hgtest::pstar_r(), hgtest::pstar_s()));
  CHECK_NOTHROW(build_k_rs(q(198, 468), q(7, 156)));  // off-conic is fine
  CHECK_THROWS_WITH_AS(build_k_rs(q(1, 10), q(1, 10)),
                       "(r, s) outside the admissible region: r + s = 1/5 "
                       "violates 2/5 <= r + s",
                       std::domain_error);
  CHECK_THROWS_AS(build_k_rs(q(1, 4), q(1, 4)), std::domain_error);

  // The raw table builder accepts anything.
  CHECK_NOTHROW(family_table(q(1, 4), q(1, 4)));
  CHECK_NOTHROW(family_table(q(-1), q(3)));
}

TEST_CASE("in-region family tables satisfy axioms (b), (c) and the identities") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const auto [r, s] = hgtest::random_in_region(rng);
    const Hypergroup h = build_k_rs(r, s);
    CHECK(validation::check_unit(h).ok());
    CHECK(validation::check_stochastic(h).ok());
    CHECK(validation::check_star_compat(h).ok());
    CHECK(validation::check_support(h).ok());
    CHECK(validation::check_derived_identities(h).ok());
  }
}

TEST_CASE("family weights are 1 at the unit and 1/p elsewhere") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [r, s] = hgtest::random_in_region(rng);
    const Hypergroup h = build_k_rs(r, s);
    const Rational p = derived_params(r, s).p;
    CHECK(weight(h, 0) == 1);
    for (int i = 1; i < 5; ++i) CHECK(weight(h, i) == 1 / p);
    CHECK(total_weight(h) == 1 + 4 / p);
  }
}

TEST_CASE("conic solutions for fixed r") {
  const Rational width = q(1, 1000000);

  SUBCASE("rational discriminant, exact roots") {
    const auto at_quarter = conic_solutions_for_r(q(1, 4), width);
    REQUIRE(at_quarter.size() == 2);
    CHECK(at_quarter[0].exact);
    CHECK(at_quarter[0].value == q(1, 4));
    CHECK(at_quarter[1].exact);
    CHECK(at_quarter[1].value == q(19, 12));

    const auto at_three_quarters = conic_solutions_for_r(q(3, 4), width);
    REQUIRE(at_three_quarters.size() == 2);
    CHECK(at_three_quarters[0].value == q(-7, 12));
    CHECK(at_three_quarters[1].value == q(3, 4));
    for (const auto& sol : at_three_quarters) {
      CHECK(conic_value(q(3, 4), sol.value) == 0);
    }
  }

  SUBCASE("irrational discriminant, certified enclosures") {
    const auto at_zero = conic_solutions_for_r(q(0), width);
    REQUIRE(at_zero.size() == 2);
    for (const auto& sol : at_zero) {
      CHECK_FALSE(sol.exact);
      CHECK(sol.hi - sol.lo < width);
      // Sign change of F(0, .) across the enclosure certifies a root inside.
      const Rational lo_val = conic_value(q(0), sol.lo);
      const Rational hi_val = conic_value(q(0), sol.hi);
      CHECK(lo_val * hi_val < 0);
    }
    // (4 - sqrt(7))/3 and (4 + sqrt(7))/3
    CHECK(to_double(at_zero[0].lo) == doctest::Approx(0.4514162296).epsilon(1e-6));
    CHECK(to_double(at_zero[1].lo) == doctest::Approx(2.2152504370).epsilon(1e-6));
  }

  CHECK_THROWS_AS(conic_solutions_for_r(q(0), q(0)), std::invalid_argument);

  SUBCASE("randomized roots are certified either way") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
      const Rational r = hgtest::random_rational(rng, 12, 10);
      const auto solutions = conic_solutions_for_r(r, width);
      REQUIRE(solutions.size() == 2);
      CHECK(solutions[0].hi < solutions[1].lo);  // distinct real roots
      for (const auto& sol : solutions) {
        if (sol.exact) {
          CHECK(conic_value(r, sol.value) == 0);
        } else {
          CHECK(sol.hi - sol.lo < width);
          CHECK(conic_value(r, sol.lo) * conic_value(r, sol.hi) < 0);
        }
      }
    }
  }
}

TEST_CASE("rational points from slopes") {
  const auto pstar = rational_point_from_slope(q(-6, 5));
  CHECK(pstar.first == hgtest::pstar_r());
  CHECK(pstar.second == hgtest::pstar_s());

  const auto base = rational_point_from_slope(q(-1));
  CHECK(base.first == q(1, 4));
  CHECK(base.second == q(1, 4));

  CHECK_THROWS_AS(rational_point_from_slope(q(-1, 3)), std::domain_error);
  CHECK_THROWS_AS(rational_point_from_slope(q(-3)), std::domain_error);

  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 40) {
    const Rational t = hgtest::random_rational(rng, 30, 17);
    if ((3 * t + 1) * (t + 3) == 0) continue;
    const auto [r, s] = rational_point_from_slope(t);
    CHECK(conic_value(r, s) == 0);
    ++checked;
  }
}

TEST_CASE("group hypergroups") {
  const Hypergroup z2 = group_hypergroup(cyclic_group_table(2));
  CHECK(convolve(z2, delta(1, 2), delta(1, 2)) == delta(0, 2));
  CHECK(validation::validate(z2).overall);

  const Hypergroup s3 = group_hypergroup(symmetric_group_3_table());
  const auto s3_report = validation::validate(s3);
  CHECK(s3_report.overall);
  CHECK(s3_report.commutativity_witness.has_value());

  const Hypergroup v4 = group_hypergroup(klein_four_table());
  const auto v4_report = validation::validate(v4);
  CHECK(v4_report.overall);
  CHECK_FALSE(v4_report.commutativity_witness.has_value());

  // Z_n weights are all 1.
  for (int n : {1, 2, 3, 4, 5}) {
    const Hypergroup zn = group_hypergroup(cyclic_group_table(n));
    for (int i = 0; i < n; ++i) CHECK(weight(zn, i) == 1);
  }

  CHECK_THROWS_AS(group_hypergroup({{1, 0}, {0, 1}}), std::invalid_argument);
  // Associative monoid with identity but no inverse for 1.
  CHECK_THROWS_AS(group_hypergroup({{0, 1}, {1, 1}}), std::invalid_argument);
  // Identity present, not associative: (1*1)*2 = 2 but 1*(1*2) = 0.
  CHECK_THROWS_AS(group_hypergroup({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("star structure enumeration") {
  const auto order5 = enumerate_star_structures(5);
  CHECK(order5.involutions.size() == 10);
  CHECK(order5.class_count == 3);

  const auto order4 = enumerate_star_structures(4);
  CHECK(order4.involutions.size() == 4);
  CHECK(order4.class_count == 2);

  const auto order1 = enumerate_star_structures(1);
  CHECK(order1.involutions.size() == 1);
  CHECK(order1.class_count == 1);

  std::set<std::vector<int>> seen;
  for (const auto& star : order5.involutions) {
    CHECK(star.is_valid());
    CHECK(star.order() == 5);
    seen.insert(star.perm);
  }
  CHECK(seen.size() == 10);  // all distinct

  // One representative of each relabeling class: trivial, fully paired,
  // and the single-pair star the non-commutative family uses.
  CHECK(seen.count({0, 1, 2, 3, 4}) == 1);
  CHECK(seen.count({0, 4, 3, 2, 1}) == 1);
  CHECK(seen.count({0, 1, 2, 4, 3}) == 1);
}
