#pragma once

// Polytopes given by vertex lists, with exact hull reduction, Minkowski
// gauges and scaled membership tests. All predicates route through the
// rational simplex solver, so answers are decisions rather than float
// comparisons.

#include <algorithm>
#include <vector>

#include "bnou/linprog.hpp"
#include "bnou/rational.hpp"
#include "bnou/vec.hpp"

namespace bnou {

struct Polytope {
  int dim = 0;
  std::vector<QVec> vertices;  // extreme points only, lexicographically sorted
};

inline bool qvec_lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace poly_detail {

// Is p a convex combination of pts?
inline bool in_convex_hull(const std::vector<QVec>& pts, const QVec& p) {
  if (pts.empty()) return false;
  const std::size_t d = p.size(), k = pts.size();
  LinearProgram lp;
  lp.objective = QVec(k, Rational(0));
  lp.bounds.assign(k, VarBound{Rational(0), std::nullopt});
  for (std::size_t i = 0; i < d; ++i) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = p[i];
    c.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = pts[j][i];
    lp.constraints.push_back(std::move(c));
  }
  Constraint total{QVec(k, Rational(1)), Rel::Eq, Rational(1)};
  lp.constraints.push_back(std::move(total));
  return lp_solve(lp).status == LPStatus::Optimal;
}

// Row rank of the span of pts, by exact Gaussian elimination.
inline int span_rank(std::vector<QVec> pts) {
  int rank = 0;
  const std::size_t d = pts.empty() ? 0 : pts[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < pts.size(); ++col) {
    std::size_t piv = row;
    while (piv < pts.size() && pts[piv][col] == 0) ++piv;
    if (piv == pts.size()) continue;
    std::swap(pts[row], pts[piv]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == row || pts[i][col] == 0) continue;
      const Rational f = pts[i][col] / pts[row][col];
      for (std::size_t j = col; j < d; ++j) pts[i][j] -= f * pts[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace poly_detail

/// Extreme points of the convex hull of `points` (duplicates and interior
/// points removed), sorted lexicographically.
inline Polytope convex_hull(int dim, const std::vector<QVec>& points) {
  if (dim <= 0) fail(ErrorCode::DimensionMismatch, "convex_hull: dimension must be positive");
  if (points.empty()) fail(ErrorCode::EmptyInput, "convex_hull: no points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "convex_hull: point width != dim");

  std::vector<QVec> uniq = points;
  std::sort(uniq.begin(), uniq.end(), qvec_lex_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<QVec> keep;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<QVec> others;
    others.reserve(uniq.size() - 1);
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (others.empty() || !poly_detail::in_convex_hull(others, uniq[i]))
      keep.push_back(uniq[i]);
  }
  return Polytope{dim, std::move(keep)};
}

/// Convex hull of points together with their negatives.
inline Polytope absolutely_convex_hull(int dim, const std::vector<QVec>& points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "absolutely_convex_hull: no points");
  std::vector<QVec> sym = points;
  sym.reserve(points.size() * 2);
  for (const auto& p : points) sym.push_back(vec_neg(p));
  return convex_hull(dim, sym);
}

inline bool polytope_is_symmetric(const Polytope& B) {
  std::vector<QVec> neg;
  neg.reserve(B.vertices.size());
  for (const auto& v : B.vertices) neg.push_back(vec_neg(v));
  std::sort(neg.begin(), neg.end(), qvec_lex_less);
  std::vector<QVec> sorted = B.vertices;
  std::sort(sorted.begin(), sorted.end(), qvec_lex_less);
  return neg == sorted;
}

struct RadialReport {
  bool bounded = true;   // vertex-described sets are bounded
  bool compact = true;   // and closed, hence compact
  bool absorbing = false;  // true iff the span is the whole space
};

/// Radial properties of an absolutely convex vertex-described set.
inline RadialReport radial_check(const Polytope& B) {
  if (B.vertices.empty()) fail(ErrorCode::EmptyInput, "radial_check: no vertices");
  if (!polytope_is_symmetric(B)) fail(ErrorCode::NotSymmetric, "radial_check: B != -B");
  return RadialReport{true, true, poly_detail::span_rank(B.vertices) == B.dim};
}

/// Minkowski gauge of x with respect to B: min { t >= 0 : x in t*B }.
/// B must be symmetric with full-dimensional span.
inline Rational gauge(const Polytope& B, const QVec& x) {
  if (B.vertices.empty()) fail(ErrorCode::EmptyInput, "gauge: no vertices");
  if (static_cast<int>(x.size()) != B.dim)
    fail(ErrorCode::DimensionMismatch, "gauge: point width != dim");
  if (!polytope_is_symmetric(B)) fail(ErrorCode::NotSymmetric, "gauge: B != -B");
  if (poly_detail::span_rank(B.vertices) != B.dim)
    fail(ErrorCode::NotAbsorbing, "gauge: B does not absorb the space");

  // For symmetric B, x in t*B iff x = sum mu_i v_i with mu >= 0, sum mu_i <= t.
  const std::size_t k = B.vertices.size();
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective = QVec(k, Rational(1));
  lp.bounds.assign(k, VarBound{Rational(0), std::nullopt});
  for (int i = 0; i < B.dim; ++i) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = x[static_cast<std::size_t>(i)];
    c.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = B.vertices[j][static_cast<std::size_t>(i)];
    lp.constraints.push_back(std::move(c));
  }
  LPOutcome out = lp_solve(lp);
  if (out.status != LPStatus::Optimal)
    throw std::logic_error("gauge: absorbing ball yielded an infeasible program");
  return out.optimum;
}

/// Exact membership test: x in t*B (t >= 0). B need not be symmetric.
inline bool membership(const Polytope& B, const QVec& x, const Rational& t) {
  if (B.vertices.empty()) fail(ErrorCode::EmptyInput, "membership: no vertices");
  if (static_cast<int>(x.size()) != B.dim)
    fail(ErrorCode::DimensionMismatch, "membership: point width != dim");
  if (t < 0) fail(ErrorCode::NegativeScale, "membership: t < 0");

  const std::size_t k = B.vertices.size();
  LinearProgram lp;
  lp.objective = QVec(k, Rational(0));
  lp.bounds.assign(k, VarBound{Rational(0), std::nullopt});
  for (int i = 0; i < B.dim; ++i) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = x[static_cast<std::size_t>(i)];
    c.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = B.vertices[j][static_cast<std::size_t>(i)];
    lp.constraints.push_back(std::move(c));
  }
  lp.constraints.push_back(Constraint{QVec(k, Rational(1)), Rel::Eq, t});
  return lp_solve(lp).status == LPStatus::Optimal;
}

inline bool polytope_eq(const Polytope& a, const Polytope& b) {
  return a.dim == b.dim && a.vertices == b.vertices;
}

}  // namespace bnou
