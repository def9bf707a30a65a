#pragma once

#include "lamtree/automorphism.hpp"

#include <algorithm>
#include <optional>

namespace lamtree {

/// Unimodular diagonalization s = u*a*v of an integer matrix, enough to
/// solve linear systems over Z exactly (no divisibility chain needed).
struct DiagonalForm {
  IntMatrix s;  // m x n, diagonal
  IntMatrix u;  // m x m, unimodular
  IntMatrix v;  // n x n, unimodular
};

inline DiagonalForm diagonalize_integer_matrix(IntMatrix a) {
  using boost::multiprecision::abs;
  size_t m = a.size();
  size_t n = m ? a[0].size() : 0;
  DiagonalForm f;
  f.u = identity_matrix(static_cast<int>(m));
  f.v = identity_matrix(static_cast<int>(n));

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(f.u[i], f.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(f.v[r][i], f.v[r][j]);
  };
  auto add_row = [&](size_t dst, size_t src, const Int& c) {
    for (size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
    for (size_t j = 0; j < m; ++j) f.u[dst][j] += c * f.u[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, const Int& c) {
    for (size_t r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
    for (size_t r = 0; r < n; ++r) f.v[r][dst] += c * f.v[r][src];
  };

  for (size_t t = 0; t < std::min(m, n); ++t) {
    // move a minimal nonzero entry of the trailing block to (t,t)
    while (true) {
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (a[i][j] != 0 &&
              (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return f.s = std::move(a), f;  // trailing block is zero
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0) {
          add_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
      for (size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          add_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      if (clean) break;
    }
  }
  f.s = std::move(a);
  return f;
}

struct IntegerSolution {
  std::vector<Int> particular;           // one solution of a*x = b
  std::vector<std::vector<Int>> kernel;  // Z-basis of {x : a*x = 0}
};

/// All integer solutions of a*x = b (a is m x n, x a column vector), or
/// nullopt when none exist.
inline std::optional<IntegerSolution> solve_integer_system(
    const IntMatrix& a, const std::vector<Int>& b) {
  size_t m = a.size();
  size_t n = m ? a[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("solve: size mismatch");
  if (n == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return IntegerSolution{{}, {}};
  }
  DiagonalForm f = diagonalize_integer_matrix(a);

  // c = u*b; solve s*z = c
  std::vector<Int> c(m, Int(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) c[i] += f.u[i][j] * b[j];

  std::vector<Int> z(n, Int(0));
  std::vector<bool> free_var(n, true);
  for (size_t i = 0; i < std::min(m, n); ++i) {
    if (f.s[i][i] != 0) {
      if (c[i] % f.s[i][i] != 0) return std::nullopt;
      z[i] = c[i] / f.s[i][i];
      free_var[i] = false;
    }
  }
  for (size_t i = 0; i < m; ++i) {
    Int lhs = (i < n && !free_var[i]) ? f.s[i][i] * z[i] : Int(0);
    if (lhs != c[i]) return std::nullopt;
  }

  IntegerSolution sol;
  sol.particular.assign(n, Int(0));
  for (size_t r = 0; r < n; ++r)
    for (size_t j = 0; j < n; ++j)
      if (z[j] != 0) sol.particular[r] += f.v[r][j] * z[j];
  for (size_t j = 0; j < n; ++j) {
    if (!free_var[j]) continue;
    std::vector<Int> k(n, Int(0));
    for (size_t r = 0; r < n; ++r) k[r] = f.v[r][j];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

/// Is x an integer combination of the given generator vectors?
inline bool in_integer_span(const std::vector<std::vector<Int>>& gens,
                            const std::vector<Int>& x) {
  size_t dim = x.size();
  for (const auto& v : x)
    (void)v;
  bool x_zero = std::all_of(x.begin(), x.end(),
                            [](const Int& v) { return v == 0; });
  if (gens.empty()) return x_zero;
  IntMatrix a(dim, std::vector<Int>(gens.size(), Int(0)));
  for (size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].size() != dim)
      throw std::invalid_argument("in_integer_span: size mismatch");
    for (size_t i = 0; i < dim; ++i) a[i][g] = gens[g][i];
  }
  return solve_integer_system(a, x).has_value();
}

}  // namespace lamtree
