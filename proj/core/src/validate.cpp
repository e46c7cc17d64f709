#include "hg/validate.hpp"

namespace hg::validation {

Check<UnitViolation> check_unit(const Hypergroup& h) {
  Check<UnitViolation> out;
  const int n = h.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != 0 && j != 0) continue;
      bool bad = false;
      for (int k = 0; k < n && !bad; ++k) {
        const int expect = (i == 0) ? (j == k ? 1 : 0) : (i == k ? 1 : 0);
        if (h.at(i, j, k) != expect) bad = true;
      }
      if (bad) out.violations.push_back({i, j});
    }
  }
  return out;
}

Check<StochasticViolation> check_stochastic(const Hypergroup& h) {
  Check<StochasticViolation> out;
  const int n = h.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational sum(0);
      for (int k = 0; k < n; ++k) {
        const Rational& m = h.at(i, j, k);
        if (m < 0) {
          out.violations.push_back(
              {i, j, StochasticViolation::Kind::kNegativeEntry, k, m});
        }
        sum += m;
      }
      if (sum != 1) {
        out.violations.push_back(
            {i, j, StochasticViolation::Kind::kBadRowSum, -1, sum});
      }
    }
  }
  return out;
}

Check<StarCompatViolation> check_star_compat(const Hypergroup& h) {
  Check<StarCompatViolation> out;
  const int n = h.order();
  const StarInvolution& star = h.star();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (h.at(i, j, k) != h.at(star(j), star(i), star(k))) {
          out.violations.push_back({i, j, k});
        }
      }
    }
  }
  return out;
}

Check<SupportViolation> check_support(const Hypergroup& h) {
  Check<SupportViolation> out;
  const int n = h.order();
  const StarInvolution& star = h.star();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool positive = h.at(i, j, 0) > 0;
      const bool required = (j == star(i));
      if (positive != required) out.violations.push_back({i, j});
    }
  }
  return out;
}

Check<AssociativityViolation> check_associativity(const Hypergroup& h) {
  Check<AssociativityViolation> out;
  const int n = h.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rational worst(0);
        for (int l = 0; l < n; ++l) {
          Rational lhs(0), rhs(0);
          for (int t = 0; t < n; ++t) {
            lhs += h.at(i, j, t) * h.at(t, k, l);
            rhs += h.at(j, k, t) * h.at(i, t, l);
          }
          Rational residual = lhs - rhs;
          if (residual < 0) residual = -residual;
          if (residual > worst) worst = residual;
        }
        if (worst != 0) out.violations.push_back({i, j, k, worst});
      }
    }
  }
  return out;
}

std::optional<std::pair<int, int>> commutativity_witness(const Hypergroup& h) {
  const int n = h.order();
  for (int i = n - 1; i >= 1; --i) {
    for (int j = n - 1; j > i; --j) {
      for (int k = 0; k < n; ++k) {
        if (h.at(i, j, k) != h.at(j, i, k)) return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate(const Hypergroup& h) {
  ValidationReport report;
  report.unit_ok = check_unit(h).ok();
  report.stochastic_violations = check_stochastic(h).violations;
  report.star_compat_violations = check_star_compat(h).violations;
  report.support_violations = check_support(h).violations;
  report.associativity_violations = check_associativity(h).violations;
  report.commutativity_witness = commutativity_witness(h);
  report.overall = report.unit_ok && report.stochastic_violations.empty() &&
                   report.star_compat_violations.empty() &&
                   report.support_violations.empty() &&
                   report.associativity_violations.empty();
  return report;
}

Check<IdentityViolation> check_derived_identities(const Hypergroup& h) {
  using Family = IdentityViolation::Family;
  Check<IdentityViolation> out;
  const int n = h.order();
  const StarInvolution& star = h.star();

  for (int i = 1; i < n; ++i) {
    const Rational& lhs = h.at(i, star(i), 0);
    const Rational& rhs = h.at(star(i), i, 0);
    if (lhs != rhs) {
      out.violations.push_back({Family::kWeightSymmetry, i, star(i), -1, lhs, rhs});
    }
  }

  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const Rational& lhs = h.at(i, j, star(i));
      const Rational& rhs = h.at(j, i, star(i));
      if (lhs != rhs) {
        out.violations.push_back({Family::kStarExchange, i, j, -1, lhs, rhs});
      }
    }
  }

  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const Rational& lhs = h.at(i, j, i);
      const Rational& rhs = h.at(j, star(i), star(i));
      if (lhs != rhs) {
        out.violations.push_back({Family::kStarShift, i, j, -1, lhs, rhs});
      }
    }
  }

  // The rotation family needs all diagonal c_0 coefficients equal.
  bool diagonal_uniform = true;
  for (int i = 2; i < n && diagonal_uniform; ++i) {
    if (h.at(i, star(i), 0) != h.at(1, star(1), 0)) diagonal_uniform = false;
  }
  if (n > 1 && diagonal_uniform) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        for (int k = 1; k < n; ++k) {
          const Rational& lhs = h.at(i, j, star(k));
          const Rational& rhs = h.at(j, k, star(i));
          if (lhs != rhs) {
            out.violations.push_back({Family::kTripleRotation, i, j, k, lhs, rhs});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace hg::validation
