#pragma once

// Finite-dimensional normed-space descriptors over the rationals.
//
// Norm values are irrational in general (the euclidean case), so comparisons
// come in two exact flavors: norm_cmp decides ||x|| <=> t with no rounding
// (squares are compared for the euclidean norm), and norm_value returns a
// rational enclosure whose width is below a caller-chosen precision, collapsed
// to a point whenever the value is rational.

#include <cstddef>
#include <vector>

#include "bnou/polytope.hpp"
#include "bnou/rational.hpp"
#include "bnou/vec.hpp"

namespace bnou {

enum class NormKind { L1, L2, Linf, Polytopal };

// `dual_side` marks the dual of a polytopal norm: the ball vertex list then
// describes the predual ball, and the norm is its support function. The other
// kinds normalize away under duality (l1 <-> linf, l2 self-dual).
struct SpaceDesc {
  int dim = 0;
  NormKind kind = NormKind::L2;
  Polytope ball;
  bool dual_side = false;
};

inline SpaceDesc l1_space(int dim) { return {dim, NormKind::L1, {}, false}; }
inline SpaceDesc l2_space(int dim) { return {dim, NormKind::L2, {}, false}; }
inline SpaceDesc linf_space(int dim) { return {dim, NormKind::Linf, {}, false}; }

/// Space normed by the gauge of `ball`, which must be a symmetric absorbing
/// polytope. The vertex list is canonicalized through convex_hull.
inline SpaceDesc polytopal_space(const Polytope& ball) {
  Polytope B = convex_hull(ball.dim, ball.vertices);
  if (!polytope_is_symmetric(B)) fail(ErrorCode::NotSymmetric, "polytopal_space: ball != -ball");
  if (poly_detail::span_rank(B.vertices) != B.dim)
    fail(ErrorCode::NotAbsorbing, "polytopal_space: ball does not absorb the space");
  return {B.dim, NormKind::Polytopal, std::move(B), false};
}

inline SpaceDesc dual_space(const SpaceDesc& s) {
  switch (s.kind) {
    case NormKind::L1: return {s.dim, NormKind::Linf, {}, false};
    case NormKind::Linf: return {s.dim, NormKind::L1, {}, false};
    case NormKind::L2: return {s.dim, NormKind::L2, {}, false};
    case NormKind::Polytopal: return {s.dim, NormKind::Polytopal, s.ball, !s.dual_side};
  }
  fail(ErrorCode::WrongSpace, "dual_space: unknown norm kind");
}

inline bool space_eq(const SpaceDesc& a, const SpaceDesc& b) {
  if (a.dim != b.dim || a.kind != b.kind) return false;
  if (a.kind != NormKind::Polytopal) return true;
  return a.dual_side == b.dual_side && polytope_eq(a.ball, b.ball);
}

enum class Cmp { Less, Equal, Greater };

namespace space_detail {

inline void check_dim(const SpaceDesc& s, const QVec& x, const char* where) {
  if (static_cast<int>(x.size()) != s.dim) fail(ErrorCode::DimensionMismatch, where);
}

inline Rational l1_norm(const QVec& x) {
  Rational s(0);
  for (const auto& v : x) s += rat_abs(v);
  return s;
}

inline Rational linf_norm(const QVec& x) {
  Rational m(0);
  for (const auto& v : x) m = rat_max(m, rat_abs(v));
  return m;
}

inline Rational l2_norm_sq(const QVec& x) {
  Rational s(0);
  for (const auto& v : x) s += v * v;
  return s;
}

// Support function of the ball vertex set: max_v |<x, v>|.
inline Rational support_norm(const Polytope& ball, const QVec& x) {
  Rational m(0);
  for (const auto& v : ball.vertices) m = rat_max(m, rat_abs(dot(x, v)));
  return m;
}

inline Cmp cmp(const Rational& a, const Rational& b) {
  return a < b ? Cmp::Less : a == b ? Cmp::Equal : Cmp::Greater;
}

}  // namespace space_detail

/// Decides ||x|| versus t exactly. Euclidean comparisons go through squares.
inline Cmp norm_cmp(const SpaceDesc& s, const QVec& x, const Rational& t) {
  using namespace space_detail;
  check_dim(s, x, "norm_cmp: point width != dim");
  switch (s.kind) {
    case NormKind::L1: return cmp(l1_norm(x), t);
    case NormKind::Linf: return cmp(linf_norm(x), t);
    case NormKind::L2: {
      if (t < 0) return Cmp::Greater;
      return cmp(l2_norm_sq(x), t * t);
    }
    case NormKind::Polytopal:
      return cmp(s.dual_side ? support_norm(s.ball, x) : gauge(s.ball, x), t);
  }
  fail(ErrorCode::WrongSpace, "norm_cmp: unknown norm kind");
}

// Rational enclosure of a norm value; exact() means the value itself.
struct NormBound {
  Rational lower;
  Rational upper;
  bool exact() const { return lower == upper; }
};

/// Norm of x as an enclosure of width <= precision (point interval whenever
/// the value is rational, which makes precision irrelevant then).
inline NormBound norm_value(const SpaceDesc& s, const QVec& x, const Rational& precision) {
  using namespace space_detail;
  check_dim(s, x, "norm_value: point width != dim");
  switch (s.kind) {
    case NormKind::L1: {
      Rational v = l1_norm(x);
      return {v, v};
    }
    case NormKind::Linf: {
      Rational v = linf_norm(x);
      return {v, v};
    }
    case NormKind::Polytopal: {
      Rational v = s.dual_side ? support_norm(s.ball, x) : gauge(s.ball, x);
      return {v, v};
    }
    case NormKind::L2: {
      const Rational sq = l2_norm_sq(x);
      Int num = rat_num(sq), den = rat_den(sq);
      Int rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
      if (rn * rn == num && rd * rd == den) {
        Rational v = make_rational(rn, rd);
        return {v, v};
      }
      if (precision <= 0)
        fail(ErrorCode::NegativeInput, "norm_value: irrational value needs positive precision");
      Rational lo = linf_norm(x), hi = l1_norm(x);  // sandwich for the euclidean norm
      while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid < sq)
          lo = mid;
        else
          hi = mid;
      }
      return {lo, hi};
    }
  }
  fail(ErrorCode::WrongSpace, "norm_value: unknown norm kind");
}

/// Norm of the pair (a, b) in a two-summand direct sum (a, b are the summand
/// norms, so they must be nonnegative).
inline Rational direct_sum_norm(NormKind kind, const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) fail(ErrorCode::NegativeInput, "direct_sum_norm: negative summand norm");
  if (kind == NormKind::L1) return a + b;
  if (kind == NormKind::Linf) return rat_max(a, b);
  fail(ErrorCode::WrongSpace, "direct_sum_norm: only l1 and linf sums are defined");
}

/// Evaluation pairing <x, phi>.
inline Rational ev_apply(const QVec& x, const QVec& phi) {
  require_same_dim(x, phi, "ev_apply");
  return dot(x, phi);
}

/// Dual norm of a functional phi on s, exactly (enclosure only in the
/// euclidean case).
inline NormBound dual_norm(const SpaceDesc& s, const QVec& phi, const Rational& precision) {
  return norm_value(dual_space(s), phi, precision);
}

struct DualWitness {
  Rational value;  // the dual norm
  QVec point;      // unit-ball point with <phi, point> == value
};

/// Dual norm together with a ball point attaining it. Defined for the kinds
/// whose ball has an explicit vertex description.
inline DualWitness dual_norm_witness(const SpaceDesc& s, const QVec& phi) {
  using namespace space_detail;
  check_dim(s, phi, "dual_norm_witness: functional width != dim");
  switch (s.kind) {
    case NormKind::L1: {
      std::size_t best = 0;
      for (std::size_t j = 1; j < phi.size(); ++j)
        if (rat_abs(phi[j]) > rat_abs(phi[best])) best = j;
      QVec pt = vec_zero(phi.size());
      if (!phi.empty()) pt[best] = phi[best] < 0 ? Rational(-1) : Rational(1);
      return {phi.empty() ? Rational(0) : rat_abs(phi[best]), std::move(pt)};
    }
    case NormKind::Linf: {
      QVec pt(phi.size());
      Rational v(0);
      for (std::size_t j = 0; j < phi.size(); ++j) {
        pt[j] = phi[j] < 0 ? Rational(-1) : Rational(1);
        v += rat_abs(phi[j]);
      }
      return {v, std::move(pt)};
    }
    case NormKind::Polytopal: {
      if (s.dual_side)
        fail(ErrorCode::WrongSpace, "dual_norm_witness: dual-side ball has no vertex list");
      const QVec* best = nullptr;
      Rational bv(0);
      bool neg = false;
      for (const auto& v : s.ball.vertices) {
        Rational val = dot(phi, v);
        if (best == nullptr || rat_abs(val) > bv) {
          best = &v;
          bv = rat_abs(val);
          neg = val < 0;
        }
      }
      if (best == nullptr) fail(ErrorCode::EmptyInput, "dual_norm_witness: empty ball");
      return {bv, neg ? vec_neg(*best) : *best};
    }
    case NormKind::L2:
      fail(ErrorCode::WrongSpace, "dual_norm_witness: euclidean ball has no vertex list");
  }
  fail(ErrorCode::WrongSpace, "dual_norm_witness: unknown norm kind");
}

/// Unit ball as a polytope, for the kinds where it is one. The sign-vector
/// ball of linf(n) has 2^n vertices; n is capped to keep that explicit list
/// an honest object.
inline Polytope ball_polytope(const SpaceDesc& s) {
  switch (s.kind) {
    case NormKind::L1: {
      std::vector<QVec> verts;
      for (int i = 0; i < s.dim; ++i) {
        verts.push_back(vec_unit(static_cast<std::size_t>(s.dim), static_cast<std::size_t>(i)));
        verts.push_back(vec_neg(verts.back()));
      }
      return convex_hull(s.dim, verts);
    }
    case NormKind::Linf: {
      if (s.dim > 16) fail(ErrorCode::WrongSpace, "ball_polytope: linf dimension too large");
      std::vector<QVec> verts;
      const std::size_t total = std::size_t(1) << s.dim;
      for (std::size_t mask = 0; mask < total; ++mask) {
        QVec v(static_cast<std::size_t>(s.dim));
        for (int i = 0; i < s.dim; ++i)
          v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Rational(1) : Rational(-1);
        verts.push_back(std::move(v));
      }
      Polytope B{s.dim, std::move(verts)};
      std::sort(B.vertices.begin(), B.vertices.end(), qvec_lex_less);
      return B;  // sign vectors are all extreme
    }
    case NormKind::Polytopal:
      if (s.dual_side)
        fail(ErrorCode::WrongSpace, "ball_polytope: dual-side ball has no vertex list");
      return s.ball;
    case NormKind::L2:
      fail(ErrorCode::WrongSpace, "ball_polytope: euclidean ball is not a polytope");
  }
  fail(ErrorCode::WrongSpace, "ball_polytope: unknown norm kind");
}

}  // namespace bnou
