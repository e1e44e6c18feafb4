#pragma once

// The pairing <(x,lam), (phi,mu)> = phi(x) + lam*mu between the two
// constructions over a space and over its dual, together with its currying
// maps: lev realizes a dual-side element as a functional, ev embeds a
// primal-side element into the double dual. Functionals are always concrete
// dual elements plus a tag, never opaque callables, so norms and equality
// stay decidable. Also here: the extension of an affine ball function to a
// linear functional, extraction of states and effects from functionals, and
// the dimension-3 euclidean cone's PSD characterization.

#include <map>
#include <optional>
#include <utility>
#include <variant>

#include "bnou/bn_ou.hpp"
#include "bnou/linprog.hpp"

namespace bnou {

/// Can elements over `a` and over `b` be paired? (b describes the dual of a,
/// or the reverse; on the sequence side one leg must be l1 against a
/// bounded-type leg.)
inline bool dual_compatible(const SpaceRef& a, const SpaceRef& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<SpaceDesc>(a))
    return space_eq(dual_space(std::get<SpaceDesc>(a)), std::get<SpaceDesc>(b));
  const SeqSpace sa = std::get<SeqSpace>(a), sb = std::get<SeqSpace>(b);
  if (sa == SeqSpace::L1) return sb != SeqSpace::L1;
  return sb == SeqSpace::L1;
}

namespace pair_detail {

inline Rational pair_payloads(const SpaceRef& sa, const Payload& a, const SpaceRef& sb,
                              const Payload& b) {
  if (!dual_compatible(sa, sb)) fail(ErrorCode::SpaceMismatch, "pair: spaces are not dual-compatible");
  payload_validate(sa, a, "pair");
  payload_validate(sb, b, "pair");
  if (std::holds_alternative<SpaceDesc>(sa)) return dot(std::get<QVec>(a), std::get<QVec>(b));
  const SeqRep& ra = std::get<SeqRep>(a);
  const SeqRep& rb = std::get<SeqRep>(b);
  return ra.space == SeqSpace::L1 ? pair_seq(rb, ra) : pair_seq(ra, rb);
}

}  // namespace pair_detail

/// <(x,lam),(phi,mu)> = phi(x) + lam*mu, exact.
inline Rational pair(const OUElem& l, const BNElem& r) {
  return pair_detail::pair_payloads(l.space, l.x, r.space, r.x) + l.lam * r.y;
}

inline Rational pair(const BNElem& l, const OUElem& r) {
  return pair_detail::pair_payloads(l.space, l.x, r.space, r.x) + l.y * r.lam;
}

// A primal element with a dual element, validated pairable at construction.
struct PairedElem {
  std::variant<BNElem, OUElem> left;
  std::variant<BNElem, OUElem> right;
};

inline PairedElem make_paired(const OUElem& l, const BNElem& r) {
  if (!dual_compatible(l.space, r.space))
    fail(ErrorCode::SpaceMismatch, "make_paired: spaces are not dual-compatible");
  return PairedElem{l, r};
}

inline PairedElem make_paired(const BNElem& l, const OUElem& r) {
  if (!dual_compatible(l.space, r.space))
    fail(ErrorCode::SpaceMismatch, "make_paired: spaces are not dual-compatible");
  return PairedElem{l, r};
}

inline Rational pair(const PairedElem& p) {
  if (std::holds_alternative<OUElem>(p.left))
    return pair(std::get<OUElem>(p.left), std::get<BNElem>(p.right));
  return pair(std::get<BNElem>(p.left), std::get<OUElem>(p.right));
}

// Functional represented by a concrete element: application is the pairing
// against that element. Lev marks a dual-side representer, Ev an embedded
// primal element acting on the dual side; the arithmetic is identical, the
// tag records provenance (it matters for the counterexample reports).
enum class FunctionalKind { Lev, Ev };

struct Functional {
  FunctionalKind kind = FunctionalKind::Lev;
  SpaceRef space;  // space of the representing element
  Payload rep;
  Rational scalar;
};

inline Functional lev(const BNElem& r) { return {FunctionalKind::Lev, r.space, r.x, r.y}; }
inline Functional lev(const OUElem& r) { return {FunctionalKind::Lev, r.space, r.x, r.lam}; }
inline Functional ev(const BNElem& r) { return {FunctionalKind::Ev, r.space, r.x, r.y}; }
inline Functional ev(const OUElem& r) { return {FunctionalKind::Ev, r.space, r.x, r.lam}; }

inline Rational apply(const Functional& f, const OUElem& e) {
  return pair_detail::pair_payloads(f.space, f.rep, e.space, e.x) + f.scalar * e.lam;
}

inline Rational apply(const Functional& f, const BNElem& e) {
  return pair_detail::pair_payloads(f.space, f.rep, e.space, e.x) + f.scalar * e.y;
}

/// Positivity of the induced functional on the paired cone: nonnegative on
/// every (x, t) with ||x|| <= t iff the representer's own norm (which is the
/// dual norm of the paired space) is at most its scalar.
inline bool functional_is_positive(const Functional& f) {
  return payload_norm_cmp(f.space, f.rep, f.scalar, "functional_is_positive") != Cmp::Greater;
}

/// State = positive and unital; the value at the unit (0,1) is the scalar.
inline bool functional_is_state(const Functional& f) {
  return f.scalar == 1 && functional_is_positive(f);
}

struct NegativityWitness {
  OUElem point;    // base element (x, 1) of the acted-on cone
  Rational value;  // functional value there, < 0
};

/// Searches the base of the acted-on order-unit cone for a point where the
/// functional goes negative (none exists iff the functional is positive).
/// The base is Ball(E) x {1}, so this is an LP over convex weights of the
/// ball vertices of E = dual of the representer's space.
inline std::optional<NegativityWitness> functional_negativity_witness(const Functional& f) {
  if (!std::holds_alternative<SpaceDesc>(f.space))
    fail(ErrorCode::WrongSpace, "functional_negativity_witness: finite-dimensional spaces only");
  const SpaceDesc acted = dual_space(std::get<SpaceDesc>(f.space));
  const Polytope ball = ball_polytope(acted);
  const QVec& phi = std::get<QVec>(f.rep);

  const std::size_t k = ball.vertices.size();
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective.resize(k);
  for (std::size_t j = 0; j < k; ++j) lp.objective[j] = dot(phi, ball.vertices[j]);
  lp.bounds.assign(k, VarBound{Rational(0), std::nullopt});
  lp.constraints.push_back(Constraint{QVec(k, Rational(1)), Rel::Eq, Rational(1)});
  LPOutcome out = lp_solve(lp);
  if (out.status != LPStatus::Optimal)
    throw std::logic_error("functional_negativity_witness: simplex over a simplex failed");
  if (out.optimum + f.scalar >= 0) return std::nullopt;

  QVec point = vec_zero(static_cast<std::size_t>(acted.dim));
  for (std::size_t j = 0; j < k; ++j)
    if (out.witness[j] != 0) point = vec_add(point, vec_scale(out.witness[j], ball.vertices[j]));
  OUElem base_elem{acted, point, Rational(1)};
  Rational value = apply(f, base_elem);
  if (value != out.optimum + f.scalar)
    throw std::logic_error("functional_negativity_witness: value mismatch");
  return NegativityWitness{std::move(base_elem), std::move(value)};
}

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return qvec_lex_less(a, b); }
};

// An affine function given by its values on the vertices of a unit ball with
// an explicit vertex list (l1, capped linf, or polytopal).
struct AffineOnBall {
  SpaceDesc space;
  std::map<QVec, Rational, QVecLess> vertex_values;
};

namespace ext_detail {

inline void check_covers_ball(const AffineOnBall& a, const Polytope& ball, const char* where) {
  if (a.vertex_values.size() != ball.vertices.size())
    fail(ErrorCode::MalformedRep, std::string(where) + ": values must cover the ball vertices");
  for (const auto& v : ball.vertices)
    if (a.vertex_values.find(v) == a.vertex_values.end())
      fail(ErrorCode::MalformedRep, std::string(where) + ": missing value at a ball vertex");
}

// Unique psi with <psi, v> = w_v for all vertices, or InconsistentValues.
inline QVec solve_vertex_system(const Polytope& ball,
                                const std::map<QVec, Rational, QVecLess>& values) {
  const std::size_t d = static_cast<std::size_t>(ball.dim);
  std::vector<QVec> rows;
  rows.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) {
    QVec row = v;
    row.push_back(values.at(v));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational fct = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j <= d; ++j) rows[i][j] -= fct * rows[rank][j];
    }
    ++rank;
  }
  // Symmetric absorbing balls span, so rank == d; leftover rows must be zero.
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][d] != 0)
      fail(ErrorCode::InconsistentValues, "ball_extension: no linear map fits the vertex values");
  if (rank != d) throw std::logic_error("ball_extension: ball vertices do not span");
  QVec psi(d, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t lead = 0;
    while (lead < d && rows[i][lead] == 0) ++lead;
    psi[lead] = rows[i][d] / rows[i][lead];
  }
  return psi;
}

}  // namespace ext_detail

/// The unique linear functional agreeing with `a` on every ball vertex
/// (InconsistentValues when the values are not linear, e.g. not odd).
inline QVec ball_extension(const AffineOnBall& a) {
  const Polytope ball = ball_polytope(a.space);
  ext_detail::check_covers_ball(a, ball, "ball_extension");
  QVec psi = ext_detail::solve_vertex_system(ball, a.vertex_values);
  for (const auto& v : ball.vertices)
    if (dot(psi, v) != a.vertex_values.at(v))
      fail(ErrorCode::InconsistentValues, "ball_extension: no linear map fits the vertex values");
  return psi;
}

/// Value of `a` at a ball point x, through convex weights over the vertices
/// (the definitional route; it agrees with <ball_extension(a), x> whenever
/// the consistency invariant holds).
inline Rational affine_eval_on_ball(const AffineOnBall& a, const QVec& x) {
  const Polytope ball = ball_polytope(a.space);
  ext_detail::check_covers_ball(a, ball, "affine_eval_on_ball");
  const std::size_t k = ball.vertices.size(), d = static_cast<std::size_t>(ball.dim);
  if (x.size() != d) fail(ErrorCode::DimensionMismatch, "affine_eval_on_ball: point width != dim");
  LinearProgram lp;
  lp.objective = QVec(k, Rational(0));
  lp.bounds.assign(k, VarBound{Rational(0), std::nullopt});
  for (std::size_t i = 0; i < d; ++i) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = x[i];
    c.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = ball.vertices[j][i];
    lp.constraints.push_back(std::move(c));
  }
  lp.constraints.push_back(Constraint{QVec(k, Rational(1)), Rel::Eq, Rational(1)});
  LPOutcome out = lp_solve(lp);
  if (out.status != LPStatus::Optimal)
    fail(ErrorCode::MalformedRep, "affine_eval_on_ball: point is outside the ball");
  Rational value(0);
  for (std::size_t j = 0; j < k; ++j)
    if (out.witness[j] != 0) value += out.witness[j] * a.vertex_values.at(ball.vertices[j]);
  return value;
}

/// The norm-scaling route to the extension value at an arbitrary point:
/// ||x|| * a(x / ||x||). Exact because the supported ball kinds have exact
/// rational norms.
inline Rational ball_extension_formula(const AffineOnBall& a, const QVec& x) {
  NormBound nb = norm_value(a.space, x, Rational(0));
  if (!nb.exact()) throw std::logic_error("ball_extension_formula: norm not exact");
  const Rational& g = nb.lower;
  if (g == 0) return Rational(0);
  return g * affine_eval_on_ball(a, vec_scale(Rational(1) / g, x));
}

/// Recovers the base element representing a state on the order-unit side:
/// probes the functional at the canonical basis (e_i, 0) and at the unit.
/// The result lives over the representer's space and has trace 1.
inline BNElem state_to_bn(const Functional& f) {
  if (!std::holds_alternative<SpaceDesc>(f.space))
    fail(ErrorCode::WrongSpace, "state_to_bn: finite-dimensional spaces only");
  if (!functional_is_state(f))
    fail(ErrorCode::NotAState, "state_to_bn: functional is not positive and unital");
  const SpaceDesc acted = dual_space(std::get<SpaceDesc>(f.space));
  const std::size_t d = static_cast<std::size_t>(acted.dim);
  QVec psi(d);
  for (std::size_t i = 0; i < d; ++i)
    psi[i] = apply(f, OUElem{acted, vec_unit(d, i), Rational(0)});
  if (apply(f, ou_unit(acted)) != 1) throw std::logic_error("state_to_bn: unit probe mismatch");
  return BNElem{f.space, std::move(psi), Rational(1)};
}

/// An affine function on the base Ball(E) x {1}, given by its vertex values
/// and its value a0 at the base point (0, 1), determines the order-unit dual
/// element (psi, a0) with psi linear and psi(x) + a0 = a(x, 1).
inline OUElem effect_to_ou(const AffineOnBall& a, const Rational& a0) {
  AffineOnBall shifted{a.space, {}};
  for (const auto& [v, w] : a.vertex_values) shifted.vertex_values.emplace(v, w - a0);
  QVec psi = ball_extension(shifted);
  for (const auto& [v, w] : a.vertex_values)
    if (dot(psi, v) + a0 != w) throw std::logic_error("effect_to_ou: reproduction failed");
  return OUElem{dual_space(a.space), std::move(psi), a0};
}

/// The dimension-3 euclidean cone test in closed form: lam >= 0 and
/// lam^2 >= x.x (nonnegative trace and determinant of lam*I + x.sigma).
/// Must agree with ou_cone_member everywhere.
inline bool bloch_psd_check(const OUElem& e) {
  if (!std::holds_alternative<SpaceDesc>(e.space))
    fail(ErrorCode::WrongSpace, "bloch_psd_check: needs the euclidean 3-space");
  const SpaceDesc& s = std::get<SpaceDesc>(e.space);
  if (s.dim != 3 || s.kind != NormKind::L2)
    fail(ErrorCode::WrongSpace, "bloch_psd_check: needs the euclidean 3-space");
  const QVec& x = std::get<QVec>(e.x);
  return e.lam >= 0 && e.lam * e.lam >= dot(x, x);
}

}  // namespace bnou
