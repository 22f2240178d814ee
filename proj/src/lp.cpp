/*
 * Copyright 2026 The multiunit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "multiunit/lp.hpp"

#include <optional>

#include "multiunit/error.hpp"

namespace multiunit::lp {

StandardFormResult solve_standard_form(const Matrix& m, const Vector& rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw Error(Errc::LengthMismatch, "rhs length differs from row count");
  const std::size_t n = rows == 0 ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(Errc::LengthMismatch, "ragged constraint matrix");
  }

  // Columns: n structural, rows artificial (signed so the start is feasible), then rhs.
  const std::size_t cols = n + rows;
  std::vector<int> sign(rows, 1);
  Matrix t(rows, Vector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (rhs[i].sign() < 0) sign[i] = -1;
    const Rat s(sign[i]);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = m[i][j] * s;
    t[i][n + i] = Rat(1);
    t[i][cols] = rhs[i] * s;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

  auto cost = [n](std::size_t j) { return j >= n ? Rat(1) : Rat(0); };

  // Reduced costs are recomputed from scratch each step; the tableaux here are tiny.
  auto reduced = [&](std::size_t j) {
    Rat r = cost(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] >= n) r -= t[i][j];
    }
    return r;
  };

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols && !enter; ++j) {
      if (reduced(j).sign() < 0) enter = j;
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    Rat best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][e].sign() <= 0) continue;
      Rat q = t[i][cols] / t[i][e];
      if (!leave || q < best || (q == best && basis[i] < basis[*leave])) {
        leave = i;
        best = std::move(q);
      }
    }
    // Phase 1 is bounded below by 0, so an improving column always has a pivot row.
    if (!leave) throw Error(Errc::InsufficientSample, "phase-1 simplex unbounded (internal error)");
    const std::size_t l = *leave;

    const Rat piv = t[l][e];
    for (auto& x : t[l]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == l || t[i][e].is_zero()) continue;
      const Rat factor = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!t[l][j].is_zero()) t[i][j] -= factor * t[l][j];
      }
    }
    basis[l] = e;
  }

  Rat objective;
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= n) objective += t[i][cols];
  }

  StandardFormResult out;
  if (objective.is_zero()) {
    out.feasible = true;
    out.solution.assign(n, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < n) out.solution[basis[i]] = t[i][cols];
    }
    return out;
  }
  // Dual of phase 1: pi_k = sign_k * (c_B^T B^-1 D)_k, read off the artificial columns.
  out.farkas.assign(rows, Rat(0));
  for (std::size_t k = 0; k < rows; ++k) {
    Rat y;
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] >= n) y += t[i][n + k];
    }
    out.farkas[k] = y * Rat(sign[k]);
  }
  return out;
}

std::variant<FeasiblePoint, InfeasibilityProof> solve_inequalities(const Matrix& g, const Vector& h) {
  const std::size_t rows = g.size();
  if (h.size() != rows) throw Error(Errc::LengthMismatch, "h length differs from row count");
  const std::size_t vars = rows == 0 ? 0 : g.front().size();
  if (rows == 0) return FeasiblePoint{Vector{}};

  // Alternative system over y >= 0: G^T y = 0, h^T y = 1.
  Matrix alt(vars + 1, Vector(rows));
  Vector rhs(vars + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (g[i].size() != vars) throw Error(Errc::LengthMismatch, "ragged inequality matrix");
    for (std::size_t j = 0; j < vars; ++j) alt[j][i] = g[i][j];
    alt[vars][i] = h[i];
  }
  rhs[vars] = Rat(1);

  auto res = solve_standard_form(alt, rhs);
  if (res.feasible) return InfeasibilityProof{std::move(res.solution)};

  // pi^T alt <= 0 and pi_h > 0, so x = -pi_x / pi_h satisfies G x >= h.
  const Rat& ph = res.farkas[vars];
  Vector x(vars);
  for (std::size_t j = 0; j < vars; ++j) x[j] = -res.farkas[j] / ph;
  return FeasiblePoint{std::move(x)};
}

bool satisfies(const Matrix& g, const Vector& h, const Vector& x) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rat lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += g[i][j] * x[j];
    if (lhs < h[i]) return false;
  }
  return true;
}

bool proves_infeasible(const Matrix& g, const Vector& h, const Vector& y) {
  if (y.size() != g.size()) return false;
  const std::size_t vars = g.empty() ? 0 : g.front().size();
  Vector combo(vars);
  Rat bound;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (y[i].sign() < 0) return false;
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < vars; ++j) combo[j] += y[i] * g[i][j];
    bound += y[i] * h[i];
  }
  for (const auto& c : combo) {
    if (!c.is_zero()) return false;
  }
  return bound.sign() > 0;
}

}  // namespace multiunit::lp
