#include "hg/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hg/families.hpp"

namespace hg::search {

namespace {

size_t flat(int n, int i, int j, int k) {
  return (static_cast<size_t>(i) * n + j) * n + k;
}

void require_tensor_shape(const std::vector<double>& tensor, int order,
                          const StarInvolution& star) {
  if (order <= 0) throw std::invalid_argument("order must be positive");
  if (tensor.size() != static_cast<size_t>(order) * order * order) {
    throw std::invalid_argument("tensor dimensions do not match order");
  }
  if (star.order() != order || !star.is_valid()) {
    throw std::invalid_argument("invalid star for order");
  }
}

}  // namespace

double residual_objective(const std::vector<double>& tensor, int order,
                          const StarInvolution& star) {
  require_tensor_shape(tensor, order, star);
  const int n = order;
  const std::vector<double>& t = tensor;
  double f = 0.0;

  // Unit rows.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double d = t[flat(n, 0, j, k)] - (j == k ? 1.0 : 0.0);
      f += d * d;
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double d = t[flat(n, i, 0, k)] - (i == k ? 1.0 : 0.0);
      f += d * d;
    }
  }

  // Row sums and negativity.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        const double v = t[flat(n, i, j, k)];
        sum += v;
        if (v < 0.0) f += v * v;
      }
      const double d = sum - 1.0;
      f += d * d;
    }
  }

  // Support pattern: mass at c_0 only on starred pairs.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == star(i)) continue;
      const double v = t[flat(n, i, j, 0)];
      f += v * v;
    }
  }

  // Star compatibility.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double d =
            t[flat(n, i, j, k)] - t[flat(n, star(j), star(i), star(k))];
        f += d * d;
      }
    }
  }

  // Associativity.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double r = 0.0;
          for (int u = 0; u < n; ++u) {
            r += t[flat(n, i, j, u)] * t[flat(n, u, k, l)] -
                 t[flat(n, j, k, u)] * t[flat(n, i, u, l)];
          }
          f += r * r;
        }
      }
    }
  }
  return f;
}

namespace {

// One block of free variables: a representative row (i, j) with i, j >= 1.
// Rows with j == star(i) carry the c_0 coordinate and are internally
// star-symmetric (coordinates k and star(k) share one variable); the other
// rows have c_0 pinned to zero and determine their partner row
// (star(j), star(i)) through star compatibility.
struct RowBlock {
  int i, j;
  bool self;                  // j == star(i)
  std::vector<int> coords;    // representative coordinate per variable
  std::vector<double> weight; // orbit size: coefficient multiplicity in the row sum
  int offset;                 // position in the packed variable vector
};

struct Problem {
  int n;
  StarInvolution star;
  std::vector<RowBlock> blocks;
  int dim;
  std::vector<int> slot_to_var;  // tensor slot -> free variable, -1 if fixed

  explicit Problem(int order, const StarInvolution& s) : n(order), star(s), dim(0) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        const int pi = star(j), pj = star(i);
        if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;  // partner is rep
        RowBlock b;
        b.i = i;
        b.j = j;
        b.self = (pi == i && pj == j);
        if (b.self) {
          for (int k = 0; k < n; ++k) {
            if (star(k) < k) continue;
            b.coords.push_back(k);
            b.weight.push_back(star(k) == k ? 1.0 : 2.0);
          }
        } else {
          for (int k = 1; k < n; ++k) {
            b.coords.push_back(k);
            b.weight.push_back(1.0);
          }
        }
        b.offset = dim;
        dim += static_cast<int>(b.coords.size());
        blocks.push_back(std::move(b));
      }
    }
    slot_to_var.assign(static_cast<size_t>(n) * n * n, -1);
    for (const RowBlock& b : blocks) {
      for (size_t v = 0; v < b.coords.size(); ++v) {
        const int k = b.coords[v];
        const int var = b.offset + static_cast<int>(v);
        slot_to_var[flat(n, b.i, b.j, k)] = var;
        if (b.self) {
          slot_to_var[flat(n, b.i, b.j, star(k))] = var;
        } else {
          slot_to_var[flat(n, star(b.j), star(b.i), star(k))] = var;
        }
      }
    }
  }

  std::vector<double> assemble(const std::vector<double>& x) const {
    std::vector<double> t(static_cast<size_t>(n) * n * n, 0.0);
    for (int j = 0; j < n; ++j) t[flat(n, 0, j, j)] = 1.0;
    for (int i = 1; i < n; ++i) t[flat(n, i, 0, i)] = 1.0;
    for (const RowBlock& b : blocks) {
      for (size_t v = 0; v < b.coords.size(); ++v) {
        const int k = b.coords[v];
        const double value = x[b.offset + v];
        t[flat(n, b.i, b.j, k)] = value;
        if (b.self) {
          t[flat(n, b.i, b.j, star(k))] = value;
        } else {
          t[flat(n, star(b.j), star(b.i), star(k))] = value;
        }
      }
      if (!b.self) {
        // k = 0 of the partner row is star-tied to the rep's zero at c_0.
        t[flat(n, star(b.j), star(b.i), 0)] = 0.0;
      }
    }
    return t;
  }

  // Associativity penalty and its gradient with respect to the free
  // variables. The structural constraints hold exactly by assembly, so
  // this is the only term the optimizer has to fight.
  double objective_and_gradient(const std::vector<double>& t,
                                std::vector<double>& grad_x) const {
    std::vector<double> g(t.size(), 0.0);
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            double r = 0.0;
            for (int u = 0; u < n; ++u) {
              r += t[flat(n, i, j, u)] * t[flat(n, u, k, l)] -
                   t[flat(n, j, k, u)] * t[flat(n, i, u, l)];
            }
            if (r == 0.0) continue;
            f += r * r;
            const double two_r = 2.0 * r;
            for (int u = 0; u < n; ++u) {
              g[flat(n, i, j, u)] += two_r * t[flat(n, u, k, l)];
              g[flat(n, u, k, l)] += two_r * t[flat(n, i, j, u)];
              g[flat(n, j, k, u)] -= two_r * t[flat(n, i, u, l)];
              g[flat(n, i, u, l)] -= two_r * t[flat(n, j, k, u)];
            }
          }
        }
      }
    }
    grad_x.assign(dim, 0.0);
    for (const RowBlock& b : blocks) {
      for (size_t v = 0; v < b.coords.size(); ++v) {
        const int k = b.coords[v];
        double acc = g[flat(n, b.i, b.j, k)];
        if (b.self) {
          if (star(k) != k) acc += g[flat(n, b.i, b.j, star(k))];
        } else {
          acc += g[flat(n, star(b.j), star(b.i), star(k))];
        }
        grad_x[b.offset + v] = acc;
      }
    }
    return f;
  }

  double objective(const std::vector<double>& t) const {
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            double r = 0.0;
            for (int u = 0; u < n; ++u) {
              r += t[flat(n, i, j, u)] * t[flat(n, u, k, l)] -
                   t[flat(n, j, k, u)] * t[flat(n, i, u, l)];
            }
            f += r * r;
          }
        }
      }
    }
    return f;
  }

  // Residual vector and Jacobian over the free variables: the
  // associativity components restricted to triples with i, j, k >= 1 (the
  // others vanish identically because the unit rows are exact by assembly)
  // plus one row-sum component per block, which keeps the polish steps
  // close to the stochastic affine subspace. The associativity residuals
  // are quadratic in the variables, which is what makes the Gauss-Newton
  // polish effective in the flat directions where plain descent crawls.
  int component_count() const {
    return (n - 1) * (n - 1) * (n - 1) * n + static_cast<int>(blocks.size());
  }

  void residuals_and_jacobian(const std::vector<double>& x,
                              const std::vector<double>& t, std::vector<double>& r_out,
                              std::vector<double>& jac) const {
    const int m = component_count();
    r_out.assign(m, 0.0);
    jac.assign(static_cast<size_t>(m) * dim, 0.0);
    int row = 0;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        for (int k = 1; k < n; ++k) {
          for (int l = 0; l < n; ++l, ++row) {
            double r = 0.0;
            for (int u = 0; u < n; ++u) {
              r += t[flat(n, i, j, u)] * t[flat(n, u, k, l)] -
                   t[flat(n, j, k, u)] * t[flat(n, i, u, l)];
            }
            r_out[row] = r;
            double* jrow = &jac[static_cast<size_t>(row) * dim];
            for (int u = 0; u < n; ++u) {
              scatter(jrow, flat(n, i, j, u), t[flat(n, u, k, l)]);
              scatter(jrow, flat(n, u, k, l), t[flat(n, i, j, u)]);
              scatter(jrow, flat(n, j, k, u), -t[flat(n, i, u, l)]);
              scatter(jrow, flat(n, i, u, l), -t[flat(n, j, k, u)]);
            }
          }
        }
      }
    }
    for (const RowBlock& b : blocks) {
      double sum = -1.0;
      double* jrow = &jac[static_cast<size_t>(row) * dim];
      for (size_t v = 0; v < b.coords.size(); ++v) {
        sum += b.weight[v] * x[b.offset + v];
        jrow[b.offset + v] = b.weight[v];
      }
      r_out[row] = sum;
      ++row;
    }
  }

 private:
  void scatter(double* jrow, size_t slot, double value) const {
    const int var = slot_to_var[slot];
    if (var >= 0) jrow[var] += value;
  }
};

// Solves (a + lambda*I) x = -g in place via Cholesky; a is dim x dim
// symmetric positive semidefinite. Returns false if the factorization
// breaks down.
bool solve_damped(std::vector<double> a, std::vector<double> g, int dim,
                  double lambda, std::vector<double>& dx) {
  for (int d = 0; d < dim; ++d) a[static_cast<size_t>(d) * dim + d] += lambda;
  // Cholesky factorization a = L L^T.
  for (int c = 0; c < dim; ++c) {
    double diag = a[static_cast<size_t>(c) * dim + c];
    for (int k = 0; k < c; ++k) {
      const double v = a[static_cast<size_t>(c) * dim + k];
      diag -= v * v;
    }
    if (!(diag > 0.0)) return false;
    const double root = std::sqrt(diag);
    a[static_cast<size_t>(c) * dim + c] = root;
    for (int rr = c + 1; rr < dim; ++rr) {
      double v = a[static_cast<size_t>(rr) * dim + c];
      for (int k = 0; k < c; ++k) {
        v -= a[static_cast<size_t>(rr) * dim + k] * a[static_cast<size_t>(c) * dim + k];
      }
      a[static_cast<size_t>(rr) * dim + c] = v / root;
    }
  }
  // Forward/back substitution for L L^T dx = -g.
  for (int rr = 0; rr < dim; ++rr) {
    double v = -g[rr];
    for (int k = 0; k < rr; ++k) v -= a[static_cast<size_t>(rr) * dim + k] * g[k];
    g[rr] = v / a[static_cast<size_t>(rr) * dim + rr];
  }
  dx.assign(dim, 0.0);
  for (int rr = dim - 1; rr >= 0; --rr) {
    double v = g[rr];
    for (int k = rr + 1; k < dim; ++k) v -= a[static_cast<size_t>(k) * dim + rr] * dx[k];
    dx[rr] = v / a[static_cast<size_t>(rr) * dim + rr];
  }
  return true;
}

// Euclidean projection onto { v >= 0 : sum_o w_o v_o = 1 }.
void project_weighted_simplex(std::vector<double>& v, const std::vector<double>& w,
                              int offset, int count) {
  thread_local std::vector<std::pair<double, int>> breaks;
  breaks.clear();
  for (int o = 0; o < count; ++o) {
    breaks.emplace_back(v[offset + o] / w[o], o);
  }
  std::sort(breaks.begin(), breaks.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  double s1 = 0.0, s2 = 0.0, tau = 0.0;
  for (int m = 0; m < count; ++m) {
    const int o = breaks[m].second;
    s1 += w[o] * v[offset + o];
    s2 += w[o] * w[o];
    const double candidate = (s1 - 1.0) / s2;
    if (m + 1 == count || candidate >= breaks[m + 1].first) {
      tau = candidate;
      break;
    }
  }
  for (int o = 0; o < count; ++o) {
    v[offset + o] = std::max(0.0, v[offset + o] - tau * w[o]);
  }
}

void project(const Problem& problem, std::vector<double>& x) {
  for (const RowBlock& b : problem.blocks) {
    project_weighted_simplex(x, b.weight, b.offset,
                             static_cast<int>(b.coords.size()));
  }
}

double uniform01(std::mt19937_64& rng) {
  // (0, 1], 53-bit mantissa; avoids implementation-defined distributions.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

// Uniform sample of each block's simplex: Dirichlet(1,..,1) via exponential
// draws, rescaled by the orbit weights so the assembled row is stochastic.
std::vector<double> initial_point(const Problem& problem, std::mt19937_64& rng) {
  std::vector<double> x(problem.dim, 0.0);
  for (const RowBlock& b : problem.blocks) {
    const int count = static_cast<int>(b.coords.size());
    double total = 0.0;
    for (int v = 0; v < count; ++v) {
      x[b.offset + v] = -std::log(uniform01(rng));
      total += x[b.offset + v];
    }
    for (int v = 0; v < count; ++v) {
      x[b.offset + v] /= total * b.weight[v];
    }
  }
  return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

constexpr double kStopTolerance = 1e-31;
constexpr double kPolishThreshold = 1e-6;

// Projected spectral gradient descent: Barzilai-Borwein steps with an
// Armijo backtrack along the projection arc. Carries the point into the
// basin of a solution; the polish below finishes the convergence.
void descend(const Problem& problem, int max_iterations, std::vector<double>& x,
             double& f) {
  std::vector<double> t = problem.assemble(x);
  std::vector<double> g;
  f = problem.objective_and_gradient(t, g);

  double ginf = 0.0;
  for (double v : g) ginf = std::max(ginf, std::fabs(v));
  double alpha = ginf > 1e-12 ? 1.0 / ginf : 1.0;

  std::vector<double> xt, gt, step;
  for (int it = 0; it < max_iterations && f > kPolishThreshold; ++it) {
    bool accepted = false;
    double ft = f;
    for (int bt = 0; bt < 60; ++bt) {
      xt = x;
      for (int d = 0; d < problem.dim; ++d) xt[d] -= alpha * g[d];
      project(problem, xt);
      step = xt;
      for (int d = 0; d < problem.dim; ++d) step[d] -= x[d];
      const double gd = dot(g, step);
      t = problem.assemble(xt);
      ft = problem.objective(t);
      if (ft <= f + 1e-4 * gd && gd < 0.0) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
      if (alpha < 1e-18) break;
    }
    if (!accepted) break;

    problem.objective_and_gradient(t, gt);
    // Barzilai-Borwein step for the next iteration.
    std::vector<double> y = gt;
    for (int d = 0; d < problem.dim; ++d) y[d] -= g[d];
    const double sy = dot(step, y);
    const double ss = dot(step, step);
    alpha = sy > 1e-30 ? std::clamp(ss / sy, 1e-10, 1e8) : alpha * 2.0;
    x.swap(xt);
    g.swap(gt);
    f = ft;
  }
}

// Projected Levenberg-Marquardt on the associativity residual vector.
// The residuals are quadratic, so this keeps a linear contraction rate
// even through the quartically flat valleys near degenerate tables where
// first-order steps stall.
void polish(const Problem& problem, std::vector<double>& x, double& f) {
  if (problem.dim == 0) return;
  const int m = problem.component_count();
  std::vector<double> residual, jac, grad(problem.dim), normal, dx, xt;
  double lambda = 1e-6;
  for (int it = 0; it < 120 && f > kStopTolerance; ++it) {
    const std::vector<double> t = problem.assemble(x);
    problem.residuals_and_jacobian(x, t, residual, jac);

    std::fill(grad.begin(), grad.end(), 0.0);
    normal.assign(static_cast<size_t>(problem.dim) * problem.dim, 0.0);
    for (int row = 0; row < m; ++row) {
      const double* jrow = &jac[static_cast<size_t>(row) * problem.dim];
      for (int a = 0; a < problem.dim; ++a) {
        if (jrow[a] == 0.0) continue;
        grad[a] += jrow[a] * residual[row];
        for (int b = a; b < problem.dim; ++b) {
          normal[static_cast<size_t>(a) * problem.dim + b] += jrow[a] * jrow[b];
        }
      }
    }
    for (int a = 0; a < problem.dim; ++a) {
      for (int b = 0; b < a; ++b) {
        normal[static_cast<size_t>(a) * problem.dim + b] =
            normal[static_cast<size_t>(b) * problem.dim + a];
      }
    }

    // Coordinates pinned at the simplex boundary whose residual gradient
    // points outward are frozen out of the step; otherwise the damped
    // solve wastes the step on directions the projection undoes.
    for (int d = 0; d < problem.dim; ++d) {
      if (x[d] == 0.0 && grad[d] > 0.0) {
        grad[d] = 0.0;
        for (int b = 0; b < problem.dim; ++b) {
          normal[static_cast<size_t>(d) * problem.dim + b] = 0.0;
          normal[static_cast<size_t>(b) * problem.dim + d] = 0.0;
        }
        normal[static_cast<size_t>(d) * problem.dim + d] = 1.0;
      }
    }

    bool accepted = false;
    for (int trial = 0; trial < 24; ++trial) {
      if (!solve_damped(normal, grad, problem.dim, lambda, dx)) {
        lambda *= 4.0;
        continue;
      }
      xt = x;
      for (int d = 0; d < problem.dim; ++d) xt[d] += dx[d];
      project(problem, xt);
      const double ft = problem.objective(problem.assemble(xt));
      if (ft < f) {
        x.swap(xt);
        f = ft;
        lambda = std::max(lambda / 3.0, 1e-14);
        accepted = true;
        break;
      }
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
    if (!accepted) break;
  }
}

Candidate run_restart(const Problem& problem, const SearchConfig& config,
                      int restart) {
  std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(restart));
  std::vector<double> x = initial_point(problem, rng);

  double f = 0.0;
  descend(problem, config.max_iterations, x, f);
  polish(problem, x, f);

  Candidate c;
  c.tensor = problem.assemble(x);
  c.residual = residual_objective(c.tensor, problem.n, problem.star);
  double defect = 0.0;
  for (int i = 0; i < problem.n; ++i) {
    for (int j = 0; j < problem.n; ++j) {
      for (int k = 0; k < problem.n; ++k) {
        defect = std::max(defect, std::fabs(c.tensor[flat(problem.n, i, j, k)] -
                                            c.tensor[flat(problem.n, j, i, k)]));
      }
    }
  }
  c.commutativity_defect = defect;
  c.restart = restart;
  return c;
}

}  // namespace

std::vector<Candidate> feasibility_search(const SearchConfig& config) {
  if (config.order <= 0) throw std::invalid_argument("order must be positive");
  if (config.star.order() != config.order || !config.star.is_valid()) {
    throw std::invalid_argument("invalid star for order");
  }
  if (config.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (config.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (!(config.residual_tolerance > 0.0) || !(config.commutativity_tolerance > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }

  const Problem problem(config.order, config.star);
  std::vector<Candidate> kept;
  for (int restart = 0; restart < config.restarts; ++restart) {
    Candidate c = run_restart(problem, config, restart);
    if (c.residual < config.residual_tolerance) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return a.restart < b.restart;
  });
  return kept;
}

std::vector<RegionSample> sample_region(const Rational& step_in) {
  const Rational step = canonical(step_in);
  const Rational half(1, 2);
  if (step <= 0 || step >= half) {
    throw std::invalid_argument("step must lie in (0, 1/2)");
  }
  const Rational band = 3 * step;
  std::vector<RegionSample> rows;
  for (Rational r(0); r < half; r += step) {
    for (Rational s(0); s < half; s += step) {
      RegionSample row;
      row.r = r;
      row.s = s;
      row.in_region = families::in_region(r, s);
      const Rational f = families::conic_value(r, s);
      row.conic_value = to_double(f);
      const Rational abs_f = f < 0 ? Rational(-f) : f;
      row.admissible = row.in_region && abs_f < band;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace hg::search
