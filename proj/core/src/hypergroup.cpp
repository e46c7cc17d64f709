#include "hg/hypergroup.hpp"

#include <stdexcept>
#include <string>

namespace hg {

bool StarInvolution::is_valid() const {
  const int n = order();
  if (n == 0 || perm[0] != 0) return false;
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n) return false;
    if (perm[perm[i]] != i) return false;
  }
  return true;
}

Hypergroup::Hypergroup(int order, StarInvolution star, std::vector<Rational> table)
    : order_(order), star_(std::move(star)), table_(std::move(table)) {
  if (order <= 0) throw std::invalid_argument("hypergroup order must be positive");
  if (star_.order() != order) {
    throw std::invalid_argument("star involution length does not match order");
  }
  if (!star_.is_valid()) {
    throw std::invalid_argument("star map is not an involution fixing 0");
  }
  const size_t expected = static_cast<size_t>(order) * order * order;
  if (table_.size() != expected) {
    throw std::invalid_argument("structure tensor has wrong dimensions");
  }
  for (Rational& v : table_) v.canonicalize();
}

Measure Hypergroup::row(int i, int j) const {
  Measure m(order_);
  for (int k = 0; k < order_; ++k) m[k] = at(i, j, k);
  return m;
}

Measure convolve(const Hypergroup& h, const Measure& mu, const Measure& nu) {
  const int n = h.order();
  if (mu.order() != n || nu.order() != n) {
    throw std::invalid_argument("convolve: measure dimension mismatch");
  }
  Measure out(n);
  for (int i = 0; i < n; ++i) {
    if (mu[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (nu[j] == 0) continue;
      const Rational scale = mu[i] * nu[j];
      for (int k = 0; k < n; ++k) {
        const Rational& m = h.at(i, j, k);
        if (m != 0) out[k] += scale * m;
      }
    }
  }
  return out;
}

Measure star_measure(const Hypergroup& h, const Measure& mu) {
  const int n = h.order();
  if (mu.order() != n) {
    throw std::invalid_argument("star_measure: measure dimension mismatch");
  }
  Measure out(n);
  for (int j = 0; j < n; ++j) out[h.star()(j)] = mu[j];
  return out;
}

Rational weight(const Hypergroup& h, int i) {
  if (i < 0 || i >= h.order()) throw std::out_of_range("weight: index out of range");
  const Rational& a0 = h.at(i, h.star()(i), 0);
  if (a0 == 0) {
    throw std::domain_error("weight: delta_" + std::to_string(i) +
                            " o delta_" + std::to_string(h.star()(i)) +
                            " has zero coefficient at c_0");
  }
  return Rational(1) / a0;
}

Rational total_weight(const Hypergroup& h) {
  Rational sum(0);
  for (int i = 0; i < h.order(); ++i) sum += weight(h, i);
  return sum;
}

}  // namespace hg
