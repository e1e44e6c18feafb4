#pragma once

// Exact two-phase primal simplex over the rationals.
//
// Everything is dense and every pivot is exact, so outcomes carry no rounding
// error: Optimal comes with a witness that satisfies each constraint with
// exact rational arithmetic, and Infeasible/Unbounded are decided, not
// estimated. Pivot selection is Bland's rule (lowest eligible index for both
// entering and leaving variable), which rules out cycling; the problems this
// library builds are small, so the speed trade-off is irrelevant.

#include <cstddef>
#include <optional>
#include <vector>

#include "bnou/rational.hpp"
#include "bnou/vec.hpp"

namespace bnou {

enum class Sense { Minimize, Maximize };
enum class Rel { Le, Eq, Ge };

struct Constraint {
  QVec coeffs;
  Rel rel = Rel::Le;
  Rational rhs;
};

struct VarBound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// Variables are free unless `bounds` says otherwise; `bounds` is either empty
// or has one entry per variable.
struct LinearProgram {
  Sense sense = Sense::Minimize;
  QVec objective;
  std::vector<Constraint> constraints;
  std::vector<VarBound> bounds;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational optimum;  // meaningful iff status == Optimal
  QVec witness;      // feasible point attaining optimum, iff Optimal
};

namespace lp_detail {

// Original variable -> nonnegative standard-form variable(s).
struct VarMap {
  enum Kind { Shift, Flip, Split } kind = Split;
  std::size_t z1 = 0, z2 = 0;
  Rational off;  // Shift: x = z1 + off.  Flip: x = off - z1.
};

struct Tableau {
  std::vector<QVec> rows;        // m x (ncols + 1); last column is the rhs
  std::vector<std::size_t> basis;  // basic variable per row
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c, QVec* cost) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (cost && (*cost)[c] != 0) {
      const Rational f = (*cost)[c];
      for (std::size_t j = 0; j <= ncols; ++j) (*cost)[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Bland iteration until optimal (true) or unbounded (false).
  bool optimize(QVec& cost, const std::vector<char>& allowed) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (allowed[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][ncols] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter, &cost);
    }
  }
};

}  // namespace lp_detail

inline LPOutcome lp_solve(const LinearProgram& p) {
  using lp_detail::VarMap;
  const std::size_t n = p.objective.size();
  if (!p.bounds.empty() && p.bounds.size() != n)
    fail(ErrorCode::DimensionMismatch, "lp_solve: bounds width != objective width");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != n)
      fail(ErrorCode::DimensionMismatch, "lp_solve: constraint width != objective width");

  for (std::size_t j = 0; j < p.bounds.size(); ++j) {
    const auto& b = p.bounds[j];
    if (b.lower && b.upper && *b.lower > *b.upper) return {LPStatus::Infeasible, 0, {}};
  }

  // Standard form: x -> z >= 0 and two-sided bounds become extra rows.
  std::vector<VarMap> vmap(n);
  std::size_t nz = 0;
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // z index, rhs
  for (std::size_t j = 0; j < n; ++j) {
    VarBound b = p.bounds.empty() ? VarBound{} : p.bounds[j];
    if (b.lower) {
      vmap[j] = {VarMap::Shift, nz, 0, *b.lower};
      if (b.upper) upper_rows.emplace_back(nz, *b.upper - *b.lower);
      ++nz;
    } else if (b.upper) {
      vmap[j] = {VarMap::Flip, nz, 0, *b.upper};
      ++nz;
    } else {
      vmap[j] = {VarMap::Split, nz, nz + 1, 0};
      nz += 2;
    }
  }

  struct ZRow {
    QVec a;
    Rel rel;
    Rational rhs;
  };
  std::vector<ZRow> zrows;
  auto substitute = [&](const QVec& coeffs, Rel rel, const Rational& rhs) {
    ZRow row{QVec(nz, Rational(0)), rel, rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& cj = coeffs[j];
      if (cj == 0) continue;
      switch (vmap[j].kind) {
        case VarMap::Shift:
          row.a[vmap[j].z1] += cj;
          row.rhs -= cj * vmap[j].off;
          break;
        case VarMap::Flip:
          row.a[vmap[j].z1] -= cj;
          row.rhs -= cj * vmap[j].off;
          break;
        case VarMap::Split:
          row.a[vmap[j].z1] += cj;
          row.a[vmap[j].z2] -= cj;
          break;
      }
    }
    zrows.push_back(std::move(row));
  };
  for (const auto& c : p.constraints) substitute(c.coeffs, c.rel, c.rhs);
  for (const auto& [zj, hi] : upper_rows) {
    ZRow row{QVec(nz, Rational(0)), Rel::Le, hi};
    row.a[zj] = 1;
    zrows.push_back(std::move(row));
  }
  for (auto& row : zrows) {
    if (row.rhs < 0) {
      row.a = vec_neg(row.a);
      row.rhs = -row.rhs;
      if (row.rel == Rel::Le)
        row.rel = Rel::Ge;
      else if (row.rel == Rel::Ge)
        row.rel = Rel::Le;
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  const std::size_t m = zrows.size();
  std::size_t nslack = 0, nart = 0;
  for (const auto& row : zrows) {
    if (row.rel != Rel::Eq) ++nslack;
    if (row.rel != Rel::Le) ++nart;
  }
  lp_detail::Tableau tab;
  tab.ncols = nz + nslack + nart;
  tab.rows.assign(m, QVec(tab.ncols + 1, Rational(0)));
  tab.basis.assign(m, 0);
  std::vector<char> is_art(tab.ncols, 0);
  std::size_t next_slack = nz, next_art = nz + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nz; ++j) tab.rows[i][j] = zrows[i].a[j];
    tab.rows[i][tab.ncols] = zrows[i].rhs;
    if (zrows[i].rel == Rel::Le) {
      tab.rows[i][next_slack] = 1;
      tab.basis[i] = next_slack++;
    } else {
      if (zrows[i].rel == Rel::Ge) tab.rows[i][next_slack] = -1, ++next_slack;
      tab.rows[i][next_art] = 1;
      is_art[next_art] = 1;
      tab.basis[i] = next_art++;
    }
  }

  std::vector<char> allowed(tab.ncols, 1);

  // Phase 1: drive the artificial variables to zero.
  if (nart > 0) {
    QVec cost1(tab.ncols + 1, Rational(0));
    for (std::size_t j = 0; j < tab.ncols; ++j)
      if (is_art[j]) cost1[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis[i]]) continue;
      for (std::size_t j = 0; j <= tab.ncols; ++j) cost1[j] -= tab.rows[i][j];
    }
    tab.optimize(cost1, allowed);  // bounded below by 0, never unbounded
    if (-cost1[tab.ncols] != 0) return {LPStatus::Infeasible, 0, {}};
    // Pivot (or drop) rows whose basic variable is still an artificial.
    for (std::size_t i = 0; i < tab.rows.size();) {
      if (!is_art[tab.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t piv = tab.ncols;
      for (std::size_t j = 0; j < tab.ncols && piv == tab.ncols; ++j)
        if (!is_art[j] && tab.rows[i][j] != 0) piv = j;
      if (piv == tab.ncols) {  // redundant row
        tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        tab.pivot(i, piv, nullptr);
        ++i;
      }
    }
    for (std::size_t j = 0; j < tab.ncols; ++j)
      if (is_art[j]) allowed[j] = 0;
  }

  // Phase 2 objective, reduced against the current basis.
  const bool maximize = p.sense == Sense::Maximize;
  QVec cost2(tab.ncols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = maximize ? -p.objective[j] : p.objective[j];
    if (cj == 0) continue;
    switch (vmap[j].kind) {
      case VarMap::Shift:
        cost2[vmap[j].z1] += cj;
        break;
      case VarMap::Flip:
        cost2[vmap[j].z1] -= cj;
        break;
      case VarMap::Split:
        cost2[vmap[j].z1] += cj;
        cost2[vmap[j].z2] -= cj;
        break;
    }
  }
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    const Rational f = cost2[tab.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= tab.ncols; ++j) cost2[j] -= f * tab.rows[i][j];
  }
  if (!tab.optimize(cost2, allowed)) return {LPStatus::Unbounded, 0, {}};

  QVec z(tab.ncols, Rational(0));
  for (std::size_t i = 0; i < tab.rows.size(); ++i) z[tab.basis[i]] = tab.rows[i][tab.ncols];
  QVec x(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    switch (vmap[j].kind) {
      case VarMap::Shift: x[j] = z[vmap[j].z1] + vmap[j].off; break;
      case VarMap::Flip: x[j] = vmap[j].off - z[vmap[j].z1]; break;
      case VarMap::Split: x[j] = z[vmap[j].z1] - z[vmap[j].z2]; break;
    }
  }

  // The witness must check out exactly; anything else is an internal bug.
  for (const auto& c : p.constraints) {
    const Rational lhs = dot(c.coeffs, x);
    const bool ok = c.rel == Rel::Le ? lhs <= c.rhs : c.rel == Rel::Ge ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) throw std::logic_error("lp_solve: witness violates a constraint");
  }
  for (std::size_t j = 0; j < p.bounds.size(); ++j) {
    if (p.bounds[j].lower && x[j] < *p.bounds[j].lower)
      throw std::logic_error("lp_solve: witness violates a lower bound");
    if (p.bounds[j].upper && x[j] > *p.bounds[j].upper)
      throw std::logic_error("lp_solve: witness violates an upper bound");
  }
  return {LPStatus::Optimal, dot(p.objective, x), std::move(x)};
}

}  // namespace bnou
