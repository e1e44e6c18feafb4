#pragma once

// The two constructions this library is about. Over a space E, both live on
// E x R with the cone { (x, y) : ||x||_E <= y }:
//
//   base-norm side:  trace (x, y) -> y, base = Ball(E) x {1},
//                    norm ||(x,y)|| = max(||x||, |y|)   (linf direct sum);
//   order-unit side: unit u = (0, 1),
//                    norm ||(x,lam)|| = ||x|| + |lam|   (l1 direct sum).
//
// The underlying E is either a finite-dimensional SpaceDesc or one of the
// representable sequence spaces; payloads are coordinate vectors or SeqReps
// accordingly.

#include <utility>
#include <variant>

#include "bnou/sequences.hpp"
#include "bnou/spaces.hpp"

namespace bnou {

using SpaceRef = std::variant<SpaceDesc, SeqSpace>;
using Payload = std::variant<QVec, SeqRep>;

inline bool spaceref_eq(const SpaceRef& a, const SpaceRef& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<SpaceDesc>(a))
    return space_eq(std::get<SpaceDesc>(a), std::get<SpaceDesc>(b));
  return std::get<SeqSpace>(a) == std::get<SeqSpace>(b);
}

inline std::string spaceref_name(const SpaceRef& s) {
  if (std::holds_alternative<SeqSpace>(s)) return seq_space_name(std::get<SeqSpace>(s));
  const SpaceDesc& d = std::get<SpaceDesc>(s);
  std::string base = d.kind == NormKind::L1      ? "l1"
                     : d.kind == NormKind::L2    ? "l2"
                     : d.kind == NormKind::Linf  ? "linf"
                     : d.dual_side               ? "polytopal-dual"
                                                 : "polytopal";
  return base + "(" + std::to_string(d.dim) + ")";
}

inline void payload_validate(const SpaceRef& s, const Payload& x, const char* where) {
  if (std::holds_alternative<SpaceDesc>(s)) {
    if (!std::holds_alternative<QVec>(x))
      fail(ErrorCode::SpaceMismatch, std::string(where) + ": finite space needs a vector payload");
    if (static_cast<int>(std::get<QVec>(x).size()) != std::get<SpaceDesc>(s).dim)
      fail(ErrorCode::DimensionMismatch, std::string(where) + ": payload width != dim");
    return;
  }
  if (!std::holds_alternative<SeqRep>(x))
    fail(ErrorCode::SpaceMismatch, std::string(where) + ": sequence space needs a SeqRep payload");
  const SeqRep& r = std::get<SeqRep>(x);
  seq_validate(r, where);
  if (r.space != std::get<SeqSpace>(s))
    fail(ErrorCode::SpaceMismatch, std::string(where) + ": SeqRep tagged with a different space");
}

inline Cmp payload_norm_cmp(const SpaceRef& s, const Payload& x, const Rational& t,
                            const char* where) {
  payload_validate(s, x, where);
  if (std::holds_alternative<SpaceDesc>(s))
    return norm_cmp(std::get<SpaceDesc>(s), std::get<QVec>(x), t);
  const Rational n = seq_norm(std::get<SeqRep>(x));
  return n < t ? Cmp::Less : n == t ? Cmp::Equal : Cmp::Greater;
}

inline NormBound payload_norm_value(const SpaceRef& s, const Payload& x, const Rational& precision,
                                    const char* where) {
  payload_validate(s, x, where);
  if (std::holds_alternative<SpaceDesc>(s))
    return norm_value(std::get<SpaceDesc>(s), std::get<QVec>(x), precision);
  const Rational n = seq_norm(std::get<SeqRep>(x));
  return {n, n};
}

inline Payload payload_zero(const SpaceRef& s) {
  if (std::holds_alternative<SpaceDesc>(s))
    return QVec(static_cast<std::size_t>(std::get<SpaceDesc>(s).dim), Rational(0));
  return seq_zero(std::get<SeqSpace>(s));
}

inline Payload payload_add(const SpaceRef& s, const Payload& a, const Payload& b) {
  if (std::holds_alternative<SpaceDesc>(s)) return vec_add(std::get<QVec>(a), std::get<QVec>(b));
  return seq_add(std::get<SeqRep>(a), std::get<SeqRep>(b));
}

inline Payload payload_sub(const SpaceRef& s, const Payload& a, const Payload& b) {
  if (std::holds_alternative<SpaceDesc>(s)) return vec_sub(std::get<QVec>(a), std::get<QVec>(b));
  return seq_sub(std::get<SeqRep>(a), std::get<SeqRep>(b));
}

inline Payload payload_scale(const SpaceRef& s, const Rational& c, const Payload& a) {
  if (std::holds_alternative<SpaceDesc>(s)) return vec_scale(c, std::get<QVec>(a));
  return seq_scale(c, std::get<SeqRep>(a));
}

inline bool payload_eq(const SpaceRef& s, const Payload& a, const Payload& b) {
  if (std::holds_alternative<SpaceDesc>(s)) return std::get<QVec>(a) == std::get<QVec>(b);
  return seq_eq(std::get<SeqRep>(a), std::get<SeqRep>(b));
}

// Element of the base-norm construction over its space; y is the trace.
struct BNElem {
  SpaceRef space;
  Payload x;
  Rational y;
};

// Element of the order-unit construction; lam is the unit coordinate.
struct OUElem {
  SpaceRef space;
  Payload x;
  Rational lam;
};

/// ||x|| <= y, decided exactly.
inline bool bn_cone_member(const BNElem& e) {
  return payload_norm_cmp(e.space, e.x, e.y, "bn_cone_member") != Cmp::Greater;
}

inline Rational bn_trace(const BNElem& e) { return e.y; }

/// Cone member with trace exactly 1.
inline bool bn_base_member(const BNElem& e) { return e.y == 1 && bn_cone_member(e); }

/// max(||x||, |y|). Exact whenever ||x|| is (everything but the euclidean
/// case); otherwise an enclosure of width <= precision.
inline NormBound bn_norm(const BNElem& e, const Rational& precision = Rational(1, 1024)) {
  NormBound nx = payload_norm_value(e.space, e.x, precision, "bn_norm");
  return {rat_max(nx.lower, rat_abs(e.y)), rat_max(nx.upper, rat_abs(e.y))};
}

/// Splits e = (x, r) - (0, r - y) into a difference of two cone members;
/// needs r >= ||x|| (first part positive) and r >= y (second part positive).
inline std::pair<BNElem, BNElem> bn_positive_decompose(const BNElem& e, const Rational& r) {
  if (payload_norm_cmp(e.space, e.x, r, "bn_positive_decompose") == Cmp::Greater)
    fail(ErrorCode::BoundTooSmall, "bn_positive_decompose: r < ||x||");
  if (r < e.y)
    fail(ErrorCode::BoundTooSmall, "bn_positive_decompose: r < y, second part would dip below the cone");
  BNElem pos{e.space, e.x, r};
  BNElem neg{e.space, payload_zero(e.space), r - e.y};
  return {std::move(pos), std::move(neg)};
}

/// ||x|| <= lam, decided exactly.
inline bool ou_cone_member(const OUElem& e) {
  return payload_norm_cmp(e.space, e.x, e.lam, "ou_cone_member") != Cmp::Greater;
}

inline OUElem ou_unit(const SpaceRef& space) { return OUElem{space, payload_zero(space), Rational(1)}; }

/// ||x|| + |lam|, exact when ||x|| is.
inline NormBound ou_norm(const OUElem& e, const Rational& precision = Rational(1, 1024)) {
  NormBound nx = payload_norm_value(e.space, e.x, precision, "ou_norm");
  return {nx.lower + rat_abs(e.lam), nx.upper + rat_abs(e.lam)};
}

/// Smallest integer n = ceil(r + lam) such that n*u - e is certified in the
/// cone, given an exact-or-upper rational bound r on ||x||. Works for any e,
/// positive or not; it needs r >= ||x|| to certify, hence NotPositive below
/// that.
inline Int ou_order_bound(const OUElem& e, const Rational& r) {
  if (payload_norm_cmp(e.space, e.x, r, "ou_order_bound") == Cmp::Greater)
    fail(ErrorCode::NotPositive,
         "ou_order_bound: r < ||x||, so n*u - e cannot be certified positive");
  Int n = rat_ceil(r + e.lam);
  OUElem diff{e.space, payload_scale(e.space, Rational(-1), e.x), Rational(n) - e.lam};
  if (!ou_cone_member(diff)) throw std::logic_error("ou_order_bound: certificate failed");
  return n;
}

inline OUElem ou_sub(const OUElem& a, const OUElem& b) {
  if (!spaceref_eq(a.space, b.space)) fail(ErrorCode::SpaceMismatch, "ou_sub");
  return OUElem{a.space, payload_sub(a.space, a.x, b.x), a.lam - b.lam};
}

inline OUElem ou_add(const OUElem& a, const OUElem& b) {
  if (!spaceref_eq(a.space, b.space)) fail(ErrorCode::SpaceMismatch, "ou_add");
  return OUElem{a.space, payload_add(a.space, a.x, b.x), a.lam + b.lam};
}

/// a <= b in the cone order.
inline bool ou_le(const OUElem& a, const OUElem& b) { return ou_cone_member(ou_sub(b, a)); }

/// 0 <= e <= u: both ||x|| <= lam and ||x|| <= 1 - lam, exactly.
inline bool effect_member(const OUElem& e) {
  return payload_norm_cmp(e.space, e.x, e.lam, "effect_member") != Cmp::Greater &&
         payload_norm_cmp(e.space, e.x, Rational(1) - e.lam, "effect_member") != Cmp::Greater;
}

}  // namespace bnou
