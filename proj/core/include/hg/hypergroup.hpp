#pragma once

#include <vector>

#include "hg/measure.hpp"
#include "hg/rational.hpp"

namespace hg {

// Involutive permutation of {0..n} fixing 0; the *-structure index map.
struct StarInvolution {
  std::vector<int> perm;

  StarInvolution() = default;
  explicit StarInvolution(std::vector<int> p) : perm(std::move(p)) {}

  static StarInvolution identity(int order) {
    std::vector<int> p(order);
    for (int i = 0; i < order; ++i) p[i] = i;
    return StarInvolution(std::move(p));
  }

  int order() const { return static_cast<int>(perm.size()); }
  int operator()(int i) const { return perm[i]; }

  bool is_valid() const;  // involution on {0..n} with perm[0] == 0

  bool operator==(const StarInvolution& other) const = default;
};

// A convolution table on {c_0, ..., c_n}: the full (n+1)^3 structure-constant
// tensor m[i][j][k] together with the star map. Constructing a Hypergroup
// value does not check the axioms; that is the validation module's job.
// Immutable after construction.
class Hypergroup {
 public:
  Hypergroup(int order, StarInvolution star, std::vector<Rational> table);

  int order() const { return order_; }
  const StarInvolution& star() const { return star_; }
  const std::vector<Rational>& table() const { return table_; }

  const Rational& at(int i, int j, int k) const {
    return table_[(static_cast<size_t>(i) * order_ + j) * order_ + k];
  }

  // The row delta_i o delta_j as a measure.
  Measure row(int i, int j) const;

  bool operator==(const Hypergroup& other) const = default;

 private:
  int order_;
  StarInvolution star_;
  std::vector<Rational> table_;
};

// Bilinear convolution induced by the structure constants:
// result_k = sum_{i,j} mu_i nu_j m[i][j][k].
Measure convolve(const Hypergroup& h, const Measure& mu, const Measure& nu);

// Pushforward along the star map: result_{star(j)} = mu_j.
Measure star_measure(const Hypergroup& h, const Measure& mu);

// w(c_i) = 1 / (delta_i o delta_{i*})|_{c_0}; throws if that coefficient
// vanishes (axiom (c) violated).
Rational weight(const Hypergroup& h, int i);

// w(K) = sum_i w(c_i).
Rational total_weight(const Hypergroup& h);

}  // namespace hg
