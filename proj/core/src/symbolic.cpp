#include "hg/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/family_structure.hpp"

namespace hg::symbolic {

BivariatePoly::BivariatePoly(const Rational& constant) {
  add_term(0, 0, constant);
}

BivariatePoly BivariatePoly::var_r() {
  BivariatePoly p;
  p.add_term(1, 0, Rational(1));
  return p;
}

BivariatePoly BivariatePoly::var_s() {
  BivariatePoly p;
  p.add_term(0, 1, Rational(1));
  return p;
}

void BivariatePoly::add_term(int deg_r, int deg_s, const Rational& c) {
  const Rational value = canonical(c);
  if (value == 0) return;
  auto key = std::make_pair(deg_r, deg_s);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

int BivariatePoly::total_degree() const {
  int deg = -1;
  for (const auto& [key, c] : coeffs_) deg = std::max(deg, key.first + key.second);
  return deg;
}

Rational BivariatePoly::coeff(int deg_r, int deg_s) const {
  auto it = coeffs_.find(std::make_pair(deg_r, deg_s));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational BivariatePoly::evaluate(const Rational& r_in, const Rational& s_in) const {
  const Rational r = canonical(r_in);
  const Rational s = canonical(s_in);
  Rational sum(0);
  for (const auto& [key, c] : coeffs_) {
    Rational term = c;
    for (int a = 0; a < key.first; ++a) term *= r;
    for (int b = 0; b < key.second; ++b) term *= s;
    sum += term;
  }
  return sum;
}

std::string BivariatePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += to_fraction_string(c);
    if (key.first > 0) out += "*r^" + std::to_string(key.first);
    if (key.second > 0) out += "*s^" + std::to_string(key.second);
  }
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.coeffs_) add_term(key.first, key.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.coeffs_) add_term(key.first, key.second, -c);
  return *this;
}

BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
  a += b;
  return a;
}

BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) {
  a -= b;
  return a;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [key, pc] : p.coeffs_) out.add_term(key.first, key.second, c * pc);
  return out;
}

BivariatePoly operator-(const BivariatePoly& p) {
  return Rational(-1) * p;
}

BivariatePoly substitute_params(std::string_view symbol) {
  const BivariatePoly r = BivariatePoly::var_r();
  const BivariatePoly s = BivariatePoly::var_s();
  const BivariatePoly sigma = r + s;
  if (symbol == "r") return r;
  if (symbol == "s") return s;
  if (symbol == "p") return BivariatePoly(2) - Rational(4) * sigma;
  if (symbol == "q") return Rational(1, 2) * sigma;
  if (symbol == "u") return Rational(1, 2) * (BivariatePoly(1) - sigma);
  if (symbol == "v") return BivariatePoly(Rational(1, 2)) - r;
  if (symbol == "w") return BivariatePoly(Rational(1, 2)) - s;
  if (symbol == "x") return Rational(1, 2) * (Rational(3) * sigma - BivariatePoly(1));
  if (symbol == "y") return Rational(5, 2) * sigma - BivariatePoly(1);
  throw std::invalid_argument("unknown family parameter: " + std::string(symbol));
}

BivariatePoly conic_poly() {
  const BivariatePoly r = BivariatePoly::var_r();
  const BivariatePoly s = BivariatePoly::var_s();
  return Rational(3) * (r * r) + Rational(10) * (r * s) + Rational(3) * (s * s) -
         Rational(8) * r - Rational(8) * s + BivariatePoly(3);
}

const std::vector<BivariatePoly>& symbolic_family_table() {
  static const std::vector<BivariatePoly> table = [] {
    families::FamilySymbols<BivariatePoly> sym{
        substitute_params("p"), substitute_params("q"), substitute_params("r"),
        substitute_params("s"), substitute_params("u"), substitute_params("v"),
        substitute_params("w"), substitute_params("x"), substitute_params("y")};
    return families::family_structure_tensor(sym);
  }();
  return table;
}

const std::array<std::array<int, 3>, 14>& catalog_triples() {
  static const std::array<std::array<int, 3>, 14> triples = {{
      {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 3},
      {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {1, 3, 4}, {3, 1, 3},
      {3, 1, 4}, {3, 3, 3}, {3, 3, 4}, {3, 4, 3},
  }};
  return triples;
}

namespace {

const BivariatePoly& table_at(int i, int j, int k) {
  return symbolic_family_table()[(static_cast<size_t>(i) * 5 + j) * 5 + k];
}

}  // namespace

BivariatePoly identity_residual(const IdentityId& id) {
  const auto& triples = catalog_triples();
  if (std::find(triples.begin(), triples.end(), id.triple) == triples.end()) {
    throw std::invalid_argument("triple is not in the identity catalog");
  }
  if (id.coefficient_index < 0 || id.coefficient_index > 4) {
    throw std::invalid_argument("coefficient index out of range");
  }
  const auto [i, j, k] = id.triple;
  const int l = id.coefficient_index;
  BivariatePoly residual;
  for (int t = 0; t < 5; ++t) {
    residual += table_at(i, j, t) * table_at(t, k, l);
    residual -= table_at(j, k, t) * table_at(i, t, l);
  }
  return residual;
}

Classification classify_residual(const BivariatePoly& p) {
  if (p.is_zero()) return {Classification::Kind::kAlwaysZero, Rational(0)};
  if (p.total_degree() > 2) {
    throw std::invalid_argument("residual degree exceeds 2; catalog shape violated");
  }
  const BivariatePoly f = conic_poly();
  // All six coefficients of F are nonzero, so proportionality is decided by
  // the single ratio at any monomial of p.
  const auto& [key, c] = *p.terms().begin();
  const Rational ratio = c / f.coeff(key.first, key.second);
  if (ratio != 0 && p == ratio * f) {
    return {Classification::Kind::kConicMultiple, ratio};
  }
  return {Classification::Kind::kOther, Rational(0)};
}

CatalogReport verify_catalog() {
  CatalogReport report;
  report.all_certified = true;
  for (const auto& triple : catalog_triples()) {
    for (int l = 0; l < 5; ++l) {
      CatalogEntry entry;
      entry.id = IdentityId{triple, l};
      entry.residual = identity_residual(entry.id);
      entry.classification = classify_residual(entry.residual);
      if (entry.classification.kind == Classification::Kind::kOther) {
        report.all_certified = false;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace hg::symbolic
