#include <doctest.h>

#include <random>

#include "hg/families.hpp"
#include "hg/validate.hpp"
#include "test_support.hpp"

using namespace hg;
using namespace hg::validation;
using hgtest::q;

namespace {

// Copy a hypergroup with one tensor entry replaced.
Hypergroup with_entry(const Hypergroup& h, int i, int j, int k, const Rational& value) {
  std::vector<Rational> table = h.table();
  const int n = h.order();
  table[(static_cast<size_t>(i) * n + j) * n + k] = value;
  return Hypergroup(n, h.star(), std::move(table));
}

}  // namespace

TEST_CASE("unit rows") {
  const Hypergroup h = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(check_unit(h).ok());

  const Hypergroup bad = with_entry(h, 0, 1, 1, q(1, 2));
  const auto result = check_unit(bad);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violations.front() == UnitViolation{0, 1});

  const Hypergroup trivial(1, StarInvolution::identity(1), {Rational(1)});
  CHECK(check_unit(trivial).ok());
}

TEST_CASE("row stochasticity") {
  const Hypergroup h = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(check_stochastic(h).ok());

  // Row (1,1) of the family sums p + y + 3q = 1 by construction.
  Rational sum(0);
  for (int k = 0; k < 5; ++k) sum += h.at(1, 1, k);
  CHECK(sum == 1);

  // Doubling an entry breaks the sum; a negative entry is flagged on its own.
  const Hypergroup scaled = with_entry(h, 1, 1, 2, 2 * h.at(1, 1, 2));
  const auto bad_sum = check_stochastic(scaled);
  REQUIRE_FALSE(bad_sum.ok());
  CHECK(bad_sum.violations.front().kind == StochasticViolation::Kind::kBadRowSum);

  const Hypergroup negative = with_entry(h, 2, 3, 1, q(-1, 4));
  const auto neg = check_stochastic(negative);
  REQUIRE_FALSE(neg.ok());
  CHECK(neg.violations.front().kind == StochasticViolation::Kind::kNegativeEntry);
  CHECK(neg.violations.front().k == 1);
}

TEST_CASE("star compatibility") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [r, s] = hgtest::random_in_region(rng);
    CHECK(check_star_compat(families::build_k_rs(r, s)).ok());
  }
  const Hypergroup s3 = families::group_hypergroup(families::symmetric_group_3_table());
  CHECK(check_star_compat(s3).ok());

  const Hypergroup h = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  const Hypergroup bad = with_entry(h, 1, 2, 3, h.at(1, 2, 3) + 1);
  const auto result = check_star_compat(bad);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violations.front() == StarCompatViolation{1, 2, 3});
}

TEST_CASE("support condition") {
  const Hypergroup z3 = families::group_hypergroup(families::cyclic_group_table(3));
  CHECK(check_support(z3).ok());

  // p = 0 on the boundary point (1/4, 1/4): every starred pair loses its
  // mass at c_0.
  const Hypergroup degenerate = families::family_table(q(1, 4), q(1, 4));
  const auto result = check_support(degenerate);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violations ==
        std::vector<SupportViolation>{{1, 1}, {2, 2}, {3, 4}, {4, 3}});

  // Mass at c_0 on a non-starred pair.
  const Hypergroup h = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  const Hypergroup bad = with_entry(h, 1, 2, 0, q(1, 2));
  const auto bad_result = check_support(bad);
  REQUIRE_FALSE(bad_result.ok());
  CHECK(bad_result.violations.front() == SupportViolation{1, 2});
}

TEST_CASE("associativity: exact on the conic, broken off it") {
  const Hypergroup on_conic = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(check_associativity(on_conic).ok());

  const Hypergroup off_conic = families::build_k_rs(q(198, 468), q(7, 156));
  const auto result = check_associativity(off_conic);
  REQUIRE_FALSE(result.ok());
  bool found_113 = false;
  for (const auto& v : result.violations) {
    if (v.i == 1 && v.j == 1 && v.k == 3) found_113 = true;
    CHECK(v.max_residual > 0);
  }
  CHECK(found_113);

  for (int n : {2, 3, 4, 5}) {
    CHECK(check_associativity(families::group_hypergroup(families::cyclic_group_table(n)))
              .ok());
  }
  CHECK(check_associativity(families::group_hypergroup(families::symmetric_group_3_table()))
            .ok());
}

TEST_CASE("commutativity witness") {
  const Hypergroup family = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(commutativity_witness(family) == std::make_pair(3, 4));
  // The delta_1 coefficients of the witness rows are r and s.
  CHECK(family.at(3, 4, 1) == q(197, 468));
  CHECK(family.at(4, 3, 1) == q(21, 468));

  const Hypergroup z5 = families::group_hypergroup(families::cyclic_group_table(5));
  CHECK_FALSE(commutativity_witness(z5).has_value());

  // r = s inside the region gives a commutative (non-associative) table.
  CHECK_FALSE(commutativity_witness(families::build_k_rs(q(11, 50), q(11, 50))).has_value());

  const Hypergroup s3 = families::group_hypergroup(families::symmetric_group_3_table());
  const auto witness = commutativity_witness(s3);
  REQUIRE(witness.has_value());
  // Brute-force the non-commuting pairs as an independent oracle.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (s3.row(i, j) != s3.row(j, i)) pairs.emplace_back(i, j);
    }
  }
  REQUIRE_FALSE(pairs.empty());
  CHECK(*witness == pairs.back());
}

TEST_CASE("validate aggregates") {
  const auto good = validate(families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s()));
  CHECK(good.overall);
  CHECK(good.unit_ok);
  CHECK(good.commutativity_witness == std::make_pair(3, 4));
  CHECK(good.associativity_violations.empty());

  const auto degenerate = validate(families::family_table(q(1, 4), q(1, 4)));
  CHECK_FALSE(degenerate.overall);
  CHECK_FALSE(degenerate.support_violations.empty());
  CHECK(degenerate.associativity_violations.empty());  // (1/4,1/4) is on the conic

  const auto z4 = validate(families::group_hypergroup(families::cyclic_group_table(4)));
  CHECK(z4.overall);
  CHECK_FALSE(z4.commutativity_witness.has_value());

  // Non-commutative but valid: the witness must not affect overall.
  const auto s3 = validate(families::group_hypergroup(families::symmetric_group_3_table()));
  CHECK(s3.overall);
  CHECK(s3.commutativity_witness.has_value());
}

TEST_CASE("trivial star forces commutativity on valid tables") {
  const Hypergroup z2 = families::group_hypergroup(families::cyclic_group_table(2));
  const Hypergroup v4 = families::group_hypergroup(families::klein_four_table());
  for (const Hypergroup& h : {z2, v4}) {
    REQUIRE(h.star() == StarInvolution::identity(h.order()));
    CHECK(validate(h).overall);
    CHECK_FALSE(commutativity_witness(h).has_value());
  }
}

TEST_CASE("derived identities") {
  const Hypergroup h = families::build_k_rs(hgtest::pstar_r(), hgtest::pstar_s());
  CHECK(check_derived_identities(h).ok());

  // The fourteen reduction equalities behind the family parameters, read
  // straight off the tensor.
  const int eq[14][6] = {
      {1, 3, 3, /**/ 3, 4, 1}, {2, 4, 4, /**/ 4, 3, 2}, {1, 4, 4, /**/ 4, 3, 1},
      {2, 3, 3, /**/ 3, 4, 2}, {1, 1, 2, /**/ 1, 2, 1}, {1, 1, 4, /**/ 1, 3, 1},
      {1, 2, 2, /**/ 2, 2, 1}, {2, 2, 4, /**/ 2, 3, 2}, {1, 3, 4, /**/ 3, 3, 1},
      {2, 3, 4, /**/ 3, 3, 2}, {1, 3, 2, /**/ 3, 2, 1}, {2, 1, 4, /**/ 1, 3, 2},
      {1, 2, 4, /**/ 2, 3, 1}, {2, 3, 1, /**/ 3, 1, 2}};
  for (const auto& e : eq) {
    CHECK(h.at(e[0], e[1], e[2]) == h.at(e[3], e[4], e[5]));
  }

  // Off-conic, in-region points still satisfy every derived identity: the
  // table is built from them.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [r, s] = hgtest::random_in_region(rng);
    CHECK(check_derived_identities(families::build_k_rs(r, s)).ok());
  }

  for (int n : {2, 3, 4, 5}) {
    CHECK(check_derived_identities(families::group_hypergroup(families::cyclic_group_table(n)))
              .ok());
  }
  CHECK(check_derived_identities(families::group_hypergroup(families::klein_four_table())).ok());
  CHECK(check_derived_identities(families::group_hypergroup(families::symmetric_group_3_table()))
            .ok());

  // Corrupt m[1][3][star(1)] so the exchange identity (and only its own
  // family) reports it.
  const Hypergroup bad = with_entry(h, 1, 3, 1, h.at(1, 3, 1) + q(1, 7));
  const auto result = check_derived_identities(bad);
  REQUIRE_FALSE(result.ok());
  bool exchange_at_13 = false;
  for (const auto& v : result.violations) {
    if (v.family == IdentityViolation::Family::kStarExchange && v.i == 1 && v.j == 3) {
      exchange_at_13 = true;
    }
  }
  CHECK(exchange_at_13);
}
