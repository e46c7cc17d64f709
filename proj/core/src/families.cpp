#include "hg/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/family_structure.hpp"

namespace hg::families {

FamilyParams derived_params(const Rational& r_in, const Rational& s_in) {
  const Rational r = canonical(r_in);
  const Rational s = canonical(s_in);
  const Rational sigma = r + s;
  FamilyParams f;
  f.r = r;
  f.s = s;
  f.p = 2 - 4 * sigma;
  f.q = sigma / 2;
  f.u = (1 - sigma) / 2;
  f.v = Rational(1, 2) - r;
  f.w = Rational(1, 2) - s;
  f.x = (3 * sigma - 1) / 2;
  f.y = Rational(5, 2) * sigma - 1;
  return f;
}

bool in_region(const Rational& r_in, const Rational& s_in) {
  const Rational r = canonical(r_in);
  const Rational s = canonical(s_in);
  const Rational half(1, 2);
  const Rational sigma = r + s;
  return r >= 0 && r < half && s >= 0 && s < half &&
         sigma >= Rational(2, 5) && sigma < half;
}

std::string region_violation(const Rational& r_in, const Rational& s_in) {
  const Rational r = canonical(r_in);
  const Rational s = canonical(s_in);
  const Rational half(1, 2);
  const Rational sigma = r + s;
  auto str = [](const Rational& q) { return to_fraction_string(q); };
  if (r < 0) return "r = " + str(r) + " violates 0 <= r";
  if (r >= half) return "r = " + str(r) + " violates r < 1/2";
  if (s < 0) return "s = " + str(s) + " violates 0 <= s";
  if (s >= half) return "s = " + str(s) + " violates s < 1/2";
  if (sigma < Rational(2, 5)) return "r + s = " + str(sigma) + " violates 2/5 <= r + s";
  if (sigma >= half) return "r + s = " + str(sigma) + " violates r + s < 1/2";
  return "";
}

Rational conic_value(const Rational& r_in, const Rational& s_in) {
  const Rational r = canonical(r_in);
  const Rational s = canonical(s_in);
  return 3 * r * r + 10 * r * s + 3 * s * s - 8 * r - 8 * s + 3;
}

Hypergroup family_table(const Rational& r, const Rational& s) {
  const FamilyParams f = derived_params(r, s);
  FamilySymbols<Rational> sym{f.p, f.q, f.r, f.s, f.u, f.v, f.w, f.x, f.y};
  StarInvolution star(std::vector<int>(kFamilyStarPerm, kFamilyStarPerm + 5));
  return Hypergroup(5, std::move(star), family_structure_tensor(sym));
}

Hypergroup build_k_rs(const Rational& r, const Rational& s) {
  const std::string violated = region_violation(r, s);
  if (!violated.empty()) {
    throw std::domain_error("(r, s) outside the admissible region: " + violated);
  }
  return family_table(r, s);
}

std::vector<ConicSolution> conic_solutions_for_r(const Rational& r_in,
                                                 const Rational& width_in) {
  const Rational r = canonical(r_in);
  const Rational width = canonical(width_in);
  if (width <= 0) throw std::invalid_argument("width must be positive");

  // F(r, s) = 3s^2 + (10r - 8)s + (3r^2 - 8r + 3); the halved discriminant
  // 16r^2 - 16r + 7 = 16(r - 1/2)^2 + 3 is positive, so both roots are real:
  // s = ((4 - 5r) +- sqrt(16r^2 - 16r + 7)) / 3.
  const Rational e = 16 * r * r - 16 * r + 7;
  const Rational center = (4 - 5 * r) / 3;

  std::vector<ConicSolution> out;
  if (auto root = rational_sqrt(e)) {
    for (int sign : {-1, 1}) {
      ConicSolution sol;
      sol.exact = true;
      sol.value = center + Rational(sign) * *root / 3;
      sol.lo = sol.hi = sol.value;
      out.push_back(std::move(sol));
    }
    return out;
  }

  // e is not a rational square: bisect m^2 - e on [0, e + 1]. The strict
  // bracket 0 < sqrt(e) < e + 1 holds because e >= 3, and m^2 == e never
  // happens for rational m, so the bracket stays strict throughout.
  Rational lo(0), hi = e + 1;
  const Rational target = 3 * width;  // the roots divide the bracket by 3
  while (hi - lo >= target) {
    const Rational mid = (lo + hi) / 2;
    if (mid * mid < e) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (int sign : {-1, 1}) {
    ConicSolution sol;
    sol.exact = false;
    if (sign < 0) {
      sol.lo = center - hi / 3;
      sol.hi = center - lo / 3;
    } else {
      sol.lo = center + lo / 3;
      sol.hi = center + hi / 3;
    }
    out.push_back(std::move(sol));
  }
  return out;
}

std::pair<Rational, Rational> rational_point_from_slope(const Rational& t_in) {
  const Rational t = canonical(t_in);
  const Rational denom = (3 * t + 1) * (t + 3);
  if (denom == 0) {
    throw std::domain_error("slope " + to_fraction_string(t) +
                            " is a degenerate line direction");
  }
  const Rational lambda = 4 * (1 + t) / denom;
  return {Rational(1, 4) + lambda, Rational(1, 4) + t * lambda};
}

Hypergroup group_hypergroup(const std::vector<std::vector<int>>& cayley) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("Cayley table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw std::invalid_argument("Cayley entry out of range");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cayley[0][i] != i || cayley[i][0] != i) {
      throw std::invalid_argument("Cayley table has no identity at index 0");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]) {
          throw std::invalid_argument("Cayley table is not associative");
        }
      }
    }
  }
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cayley[i][j] == 0 && cayley[j][i] == 0) {
        inverse[i] = j;
        break;
      }
    }
    if (inverse[i] < 0) throw std::invalid_argument("Cayley table misses an inverse");
  }

  std::vector<Rational> table(static_cast<size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[(static_cast<size_t>(i) * n + j) * n + cayley[i][j]] = 1;
    }
  }
  return Hypergroup(n, StarInvolution(std::move(inverse)), std::move(table));
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
  if (n <= 0) throw std::invalid_argument("group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

std::vector<std::vector<int>> klein_four_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  }
  return t;
}

std::vector<std::vector<int>> symmetric_group_3_table() {
  // Elements as permutations of {0,1,2}: e, (01), (02), (12), (012), (021),
  // composed as (a*b)(x) = a(b(x)).
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&perms](const int p[3]) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    }
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int composed[3];
      for (int x = 0; x < 3; ++x) composed[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(composed);
    }
  }
  return t;
}

namespace {

void extend_involution(int order, std::vector<int>& perm, int next,
                       std::vector<StarInvolution>& out) {
  while (next < order && perm[next] >= 0) ++next;
  if (next == order) {
    out.emplace_back(perm);
    return;
  }
  perm[next] = next;  // fixed point
  extend_involution(order, perm, next + 1, out);
  perm[next] = -1;
  for (int partner = next + 1; partner < order; ++partner) {
    if (perm[partner] >= 0) continue;
    perm[next] = partner;
    perm[partner] = next;
    extend_involution(order, perm, next + 1, out);
    perm[next] = -1;
    perm[partner] = -1;
  }
}

}  // namespace

StarEnumeration enumerate_star_structures(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> perm(order, -1);
  perm[0] = 0;
  StarEnumeration result;
  extend_involution(order, perm, 1, result.involutions);
  std::sort(result.involutions.begin(), result.involutions.end(),
            [](const StarInvolution& a, const StarInvolution& b) {
              return a.perm < b.perm;
            });
  // Relabeling classes are determined by the number of 2-cycles.
  result.class_count = (order - 1) / 2 + 1;
  return result;
}

}  // namespace hg::families
