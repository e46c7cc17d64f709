#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hg/hypergroup.hpp"

namespace hg::symmetry {

// Permutation of {0..n} fixing 0, acting on tensors by pushforward.
struct Relabeling {
  std::vector<int> perm;

  Relabeling() = default;
  explicit Relabeling(std::vector<int> p) : perm(std::move(p)) {}

  static Relabeling identity(int order);
  static Relabeling transposition(int order, int a, int b);

  int order() const { return static_cast<int>(perm.size()); }
  int operator()(int i) const { return perm[i]; }
  bool is_valid() const;  // bijection fixing 0

  // Composition acting left-to-right on points: (a.after(b))(i) = a(b(i)).
  Relabeling after(const Relabeling& inner) const;
};

// Pushforward: result[s(i)][s(j)][s(k)] = m[i][j][k], star conjugated.
Hypergroup relabel(const Hypergroup& h, const Relabeling& sigma);

// True iff relabel(a, sigma) equals b exactly (tensor and star).
bool check_isomorphism(const Hypergroup& a, const Hypergroup& b,
                       const Relabeling& sigma);

struct ReducedAssociativityResult {
  bool ok;
  std::optional<std::array<int, 3>> violating_triple;  // first failing one
};

// Associativity restricted to the fourteen catalogued triples; for tensors
// in the order-5 family shape (star = [0,1,2,4,3]) this is equivalent to
// the full check. Throws on any other order or star.
ReducedAssociativityResult reduced_associativity(const Hypergroup& h);

}  // namespace hg::symmetry
