#pragma once

#include <vector>

#include "hg/rational.hpp"

namespace hg {

// A (signed, rational) measure on the ground set {c_0, ..., c_n}, stored as
// its coefficient vector. Probability measures are the nonnegative, sum-1
// case; nothing here enforces that.
struct Measure {
  std::vector<Rational> coeffs;

  Measure() = default;
  explicit Measure(int order) : coeffs(order, Rational(0)) {}
  explicit Measure(std::vector<Rational> c) : coeffs(std::move(c)) {
    for (Rational& v : coeffs) v.canonicalize();
  }

  int order() const { return static_cast<int>(coeffs.size()); }
  const Rational& operator[](int i) const { return coeffs[i]; }
  Rational& operator[](int i) { return coeffs[i]; }

  bool operator==(const Measure& other) const = default;

  Rational total_mass() const;
  bool is_probability() const;  // nonnegative and sums to 1
};

// Dirac measure at index i.
Measure delta(int i, int order);

Measure operator+(const Measure& a, const Measure& b);
Measure operator-(const Measure& a, const Measure& b);
Measure operator*(const Rational& scalar, const Measure& m);

}  // namespace hg
