#include "hg/measure.hpp"

#include <stdexcept>

namespace hg {

Rational Measure::total_mass() const {
  Rational sum(0);
  for (const Rational& c : coeffs) sum += c;
  return sum;
}

bool Measure::is_probability() const {
  for (const Rational& c : coeffs) {
    if (c < 0) return false;
  }
  return total_mass() == 1;
}

Measure delta(int i, int order) {
  if (order <= 0) throw std::invalid_argument("delta: order must be positive");
  if (i < 0 || i >= order) {
    throw std::out_of_range("delta: index " + std::to_string(i) +
                            " out of range for order " + std::to_string(order));
  }
  Measure m(order);
  m[i] = 1;
  return m;
}

namespace {

void require_same_order(const Measure& a, const Measure& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("measure dimension mismatch");
  }
}

}  // namespace

Measure operator+(const Measure& a, const Measure& b) {
  require_same_order(a, b);
  Measure out = a;
  for (int i = 0; i < b.order(); ++i) out[i] += b[i];
  return out;
}

Measure operator-(const Measure& a, const Measure& b) {
  require_same_order(a, b);
  Measure out = a;
  for (int i = 0; i < b.order(); ++i) out[i] -= b[i];
  return out;
}

Measure operator*(const Rational& scalar, const Measure& m) {
  const Rational factor = canonical(scalar);
  Measure out = m;
  for (Rational& c : out.coeffs) c *= factor;
  return out;
}

}  // namespace hg
