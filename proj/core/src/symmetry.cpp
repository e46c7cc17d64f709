#include "hg/symmetry.hpp"

#include <stdexcept>

#include "hg/family_structure.hpp"
#include "hg/symbolic.hpp"

namespace hg::symmetry {

Relabeling Relabeling::identity(int order) {
  std::vector<int> p(order);
  for (int i = 0; i < order; ++i) p[i] = i;
  return Relabeling(std::move(p));
}

Relabeling Relabeling::transposition(int order, int a, int b) {
  Relabeling sigma = identity(order);
  std::swap(sigma.perm[a], sigma.perm[b]);
  return sigma;
}

bool Relabeling::is_valid() const {
  const int n = order();
  if (n == 0 || perm[0] != 0) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Relabeling Relabeling::after(const Relabeling& inner) const {
  if (order() != inner.order()) {
    throw std::invalid_argument("relabeling composition: order mismatch");
  }
  std::vector<int> p(order());
  for (int i = 0; i < order(); ++i) p[i] = perm[inner.perm[i]];
  return Relabeling(std::move(p));
}

Hypergroup relabel(const Hypergroup& h, const Relabeling& sigma) {
  const int n = h.order();
  if (sigma.order() != n) {
    throw std::invalid_argument("relabel: permutation length mismatch");
  }
  if (!sigma.is_valid()) {
    throw std::invalid_argument("relabel: not a bijection fixing 0");
  }
  std::vector<Rational> table(static_cast<size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        table[(static_cast<size_t>(sigma(i)) * n + sigma(j)) * n + sigma(k)] =
            h.at(i, j, k);
      }
    }
  }
  // star' = sigma o star o sigma^{-1}
  std::vector<int> star(n);
  for (int i = 0; i < n; ++i) star[sigma(i)] = sigma(h.star()(i));
  return Hypergroup(n, StarInvolution(std::move(star)), std::move(table));
}

bool check_isomorphism(const Hypergroup& a, const Hypergroup& b,
                       const Relabeling& sigma) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("check_isomorphism: order mismatch");
  }
  return relabel(a, sigma) == b;
}

ReducedAssociativityResult reduced_associativity(const Hypergroup& h) {
  if (h.order() != 5) {
    throw std::invalid_argument("reduced_associativity expects order 5");
  }
  const std::vector<int> expected(families::kFamilyStarPerm,
                                  families::kFamilyStarPerm + 5);
  if (h.star().perm != expected) {
    throw std::invalid_argument(
        "reduced_associativity expects the star structure [0,1,2,4,3]");
  }
  for (const auto& [i, j, k] : symbolic::catalog_triples()) {
    for (int l = 0; l < 5; ++l) {
      Rational lhs(0), rhs(0);
      for (int t = 0; t < 5; ++t) {
        lhs += h.at(i, j, t) * h.at(t, k, l);
        rhs += h.at(j, k, t) * h.at(i, t, l);
      }
      if (lhs != rhs) return {false, std::array<int, 3>{i, j, k}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace hg::symmetry
