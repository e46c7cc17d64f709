#pragma once

#include <vector>

namespace hg::families {

// Star map of the order-5 family: c_3 and c_4 are starred to each other.
inline const int kFamilyStarPerm[5] = {0, 1, 2, 4, 3};

template <class T>
struct FamilySymbols {
  T p, q, r, s, u, v, w, x, y;
};

// The sixteen structure equations of the order-5 family, transcribed once
// and shared by the exact-rational and symbolic-polynomial builders.
// Returns the flat 5x5x5 tensor (index (i*5+j)*5+k); unit rows included.
template <class T>
std::vector<T> family_structure_tensor(const FamilySymbols<T>& f) {
  const T zero(0);
  const T one(1);
  std::vector<T> t(125, zero);
  auto row = [&t](int i, int j, T c0, T c1, T c2, T c3, T c4) {
    const size_t base = (static_cast<size_t>(i) * 5 + j) * 5;
    t[base + 0] = std::move(c0);
    t[base + 1] = std::move(c1);
    t[base + 2] = std::move(c2);
    t[base + 3] = std::move(c3);
    t[base + 4] = std::move(c4);
  };

  for (int j = 0; j < 5; ++j) t[(0 * 5 + j) * 5 + j] = one;  // delta_0 o mu = mu
  for (int i = 1; i < 5; ++i) t[(i * 5 + 0) * 5 + i] = one;  // mu o delta_0 = mu

  row(1, 1, f.p, f.y, f.q, f.q, f.q);
  row(2, 2, f.p, f.q, f.y, f.q, f.q);
  row(3, 4, f.p, f.r, f.s, f.x, f.x);
  row(4, 3, f.p, f.s, f.r, f.x, f.x);

  row(1, 2, zero, f.q, f.q, f.v, f.w);
  row(2, 1, zero, f.q, f.q, f.w, f.v);

  row(1, 3, zero, f.q, f.v, f.r, f.u);
  row(4, 1, zero, f.q, f.v, f.u, f.r);
  row(3, 1, zero, f.q, f.w, f.s, f.u);
  row(1, 4, zero, f.q, f.w, f.u, f.s);

  row(2, 3, zero, f.w, f.q, f.s, f.u);
  row(4, 2, zero, f.w, f.q, f.u, f.s);
  row(3, 2, zero, f.v, f.q, f.r, f.u);
  row(2, 4, zero, f.v, f.q, f.u, f.r);

  row(3, 3, zero, f.u, f.u, f.x, f.u);
  row(4, 4, zero, f.u, f.u, f.u, f.x);
  return t;
}

}  // namespace hg::families
