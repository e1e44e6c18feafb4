#pragma once

// Finitely-presented elements of the classical sequence spaces c0, c, l1 and
// linf, closed under the manipulations the rest of the library needs and with
// every norm, limit and pairing computable in exact rational arithmetic.
//
// A representation is
//
//     value(i) = entries[i]                                  if i is listed,
//              = tail + coeff * ratio^(i - start)            if i >= start,
//              = tail                                        otherwise,
//
// with 1-based indices, |ratio| < 1, and start strictly beyond every listed
// index. Such sequences always converge (to `tail`), which is all the
// constructions here require of linf elements; c0 and l1 force tail = 0.
// Geometric tails make genuinely infinite objects (their l1 masses, sup norms
// and pairings) exactly computable through the closed form of the geometric
// series.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnou/rational.hpp"

namespace bnou {

enum class SeqSpace { C0, C, L1, Linf };

inline const char* seq_space_name(SeqSpace s) {
  switch (s) {
    case SeqSpace::C0: return "c0";
    case SeqSpace::C: return "c";
    case SeqSpace::L1: return "l1";
    case SeqSpace::Linf: return "linf";
  }
  return "?";
}

struct GeoTail {
  Rational coeff;
  Rational ratio;
  long start = 1;
};

struct SeqRep {
  SeqSpace space = SeqSpace::C0;
  std::map<long, Rational> entries;  // finite overrides, 1-based
  Rational tail;                     // limit of the sequence
  std::optional<GeoTail> geo;
};

inline long seq_max_explicit(const SeqRep& a) {
  return a.entries.empty() ? 0 : a.entries.rbegin()->first;
}

inline void seq_validate(const SeqRep& a, const char* where) {
  for (const auto& [i, v] : a.entries) {
    (void)v;
    if (i < 1) fail(ErrorCode::MalformedRep, std::string(where) + ": index < 1");
  }
  if (a.geo) {
    if (rat_abs(a.geo->ratio) >= 1)
      fail(ErrorCode::MalformedRep, std::string(where) + ": |ratio| >= 1");
    if (a.geo->start < 1) fail(ErrorCode::MalformedRep, std::string(where) + ": start < 1");
    if (a.geo->start <= seq_max_explicit(a))
      fail(ErrorCode::MalformedRep, std::string(where) + ": geometric tail overlaps entries");
  }
  if ((a.space == SeqSpace::C0 || a.space == SeqSpace::L1) && a.tail != 0)
    fail(ErrorCode::MalformedRep, std::string(where) + ": this space forces a zero tail");
}

inline Rational seq_value(const SeqRep& a, long i) {
  if (i < 1) fail(ErrorCode::MalformedRep, "seq_value: index < 1");
  auto it = a.entries.find(i);
  if (it != a.entries.end()) return it->second;
  Rational v = a.tail;
  if (a.geo && i >= a.geo->start) v += a.geo->coeff * rat_pow(a.geo->ratio, i - a.geo->start);
  return v;
}

inline SeqRep seq_zero(SeqSpace space) { return SeqRep{space, {}, Rational(0), std::nullopt}; }

inline SeqRep seq_const(SeqSpace space, const Rational& c) {
  SeqRep r{space, {}, c, std::nullopt};
  seq_validate(r, "seq_const");
  return r;
}

/// Exact norm in the element's own space. For the sup-norm spaces the value
/// is the max over the listed entries, the limit, and the first two geometric
/// offsets (an affine function of ratio^k takes its extreme values at
/// k in {0, 1} or in the limit, since ratio^k stays inside [ratio, 1]).
/// For l1 it is the entry mass plus the geometric series.
inline Rational seq_norm(const SeqRep& a) {
  seq_validate(a, "seq_norm");
  if (a.space == SeqSpace::L1) {
    Rational s(0);
    for (const auto& [i, v] : a.entries) {
      (void)i;
      s += rat_abs(v);
    }
    if (a.geo) s += rat_abs(a.geo->coeff) / (Rational(1) - rat_abs(a.geo->ratio));
    return s;
  }
  Rational m = rat_abs(a.tail);
  for (const auto& [i, v] : a.entries) {
    (void)i;
    m = rat_max(m, rat_abs(v));
  }
  if (a.geo) {
    m = rat_max(m, rat_abs(a.tail + a.geo->coeff));
    m = rat_max(m, rat_abs(a.tail + a.geo->coeff * a.geo->ratio));
  }
  return m;
}

/// Limit of the sequence (representable sequences always converge).
inline Rational seq_limit(const SeqRep& a) {
  seq_validate(a, "seq_limit");
  return a.tail;
}

inline SeqRep seq_scale(const Rational& c, const SeqRep& a) {
  seq_validate(a, "seq_scale");
  SeqRep r = a;
  for (auto& [i, v] : r.entries) {
    (void)i;
    v *= c;
  }
  r.tail *= c;
  if (r.geo) r.geo->coeff *= c;
  return r;
}

/// Pointwise sum. Representable only when at most one operand has a
/// geometric tail or both tails share a ratio; MalformedRep otherwise.
inline SeqRep seq_add(const SeqRep& a, const SeqRep& b) {
  seq_validate(a, "seq_add");
  seq_validate(b, "seq_add");
  if (a.space != b.space) fail(ErrorCode::SpaceMismatch, "seq_add: operands in different spaces");
  if (a.geo && b.geo && a.geo->ratio != b.geo->ratio)
    fail(ErrorCode::MalformedRep, "seq_add: incompatible geometric tails");

  SeqRep r = seq_zero(a.space);
  r.tail = a.tail + b.tail;

  long S = 0;  // first index of the combined geometric region (0 = none)
  if (a.geo || b.geo) {
    S = std::max(seq_max_explicit(a), seq_max_explicit(b)) + 1;
    if (a.geo) S = std::max(S, a.geo->start);
    if (b.geo) S = std::max(S, b.geo->start);
    Rational ratio = a.geo ? a.geo->ratio : b.geo->ratio;
    Rational coeff(0);
    if (a.geo) coeff += a.geo->coeff * rat_pow(a.geo->ratio, S - a.geo->start);
    if (b.geo) coeff += b.geo->coeff * rat_pow(b.geo->ratio, S - b.geo->start);
    r.geo = GeoTail{coeff, ratio, S};
  }

  // Everything below S that can differ from the plain tail becomes explicit.
  auto mark = [&](const SeqRep& src) {
    for (const auto& [i, v] : src.entries) {
      (void)v;
      if (S == 0 || i < S) r.entries[i] = seq_value(a, i) + seq_value(b, i);
    }
    if (src.geo)
      for (long i = src.geo->start; i < S; ++i) r.entries[i] = seq_value(a, i) + seq_value(b, i);
  };
  mark(a);
  mark(b);
  for (auto it = r.entries.begin(); it != r.entries.end();) {
    if (it->second == r.tail)
      it = r.entries.erase(it);
    else
      ++it;
  }
  seq_validate(r, "seq_add result");
  return r;
}

inline SeqRep seq_sub(const SeqRep& a, const SeqRep& b) {
  return seq_add(a, seq_scale(Rational(-1), b));
}

/// Adds the constant c to every term. Leaves l1 only if c = 0; a shifted c0
/// sequence lands in c.
inline SeqRep seq_add_const(const SeqRep& a, const Rational& c) {
  seq_validate(a, "seq_add_const");
  if (a.space == SeqSpace::L1 && c != 0)
    fail(ErrorCode::SpaceMismatch, "seq_add_const: constants do not live in l1");
  SeqRep r = a;
  if (r.space == SeqSpace::C0 && c != 0) r.space = SeqSpace::C;
  for (auto& [i, v] : r.entries) {
    (void)i;
    v += c;
  }
  r.tail += c;
  return r;
}

/// First n terms kept, everything beyond set to zero.
inline SeqRep seq_truncate(const SeqRep& a, long n) {
  seq_validate(a, "seq_truncate");
  if (n < 0) fail(ErrorCode::NegativeInput, "seq_truncate: n < 0");
  SeqRep r = seq_zero(a.space);
  for (long i = 1; i <= n; ++i) {
    Rational v = seq_value(a, i);
    if (v != 0) r.entries[i] = v;
  }
  return r;
}

/// Sum over i > n of value(i), in closed form (l1 only).
inline Rational seq_signed_tail_sum(const SeqRep& a, long n) {
  seq_validate(a, "seq_signed_tail_sum");
  if (a.space != SeqSpace::L1) fail(ErrorCode::SpaceMismatch, "seq_signed_tail_sum: not an l1 rep");
  Rational s(0);
  for (const auto& [i, v] : a.entries)
    if (i > n) s += v;
  if (a.geo) {
    long k0 = std::max<long>(n + 1 - a.geo->start, 0);
    s += a.geo->coeff * rat_pow(a.geo->ratio, k0) / (Rational(1) - a.geo->ratio);
  }
  return s;
}

/// Sum over i > n of |value(i)| (l1 only).
inline Rational seq_tail_l1(const SeqRep& a, long n) {
  seq_validate(a, "seq_tail_l1");
  if (a.space != SeqSpace::L1) fail(ErrorCode::SpaceMismatch, "seq_tail_l1: not an l1 rep");
  Rational s(0);
  for (const auto& [i, v] : a.entries)
    if (i > n) s += rat_abs(v);
  if (a.geo) {
    long k0 = std::max<long>(n + 1 - a.geo->start, 0);
    s += rat_abs(a.geo->coeff) * rat_pow(rat_abs(a.geo->ratio), k0) /
         (Rational(1) - rat_abs(a.geo->ratio));
  }
  return s;
}

/// Pairing sum_i a_i phi_i of a bounded-type sequence (c0, c or linf rep)
/// against an l1 functional. Splits at the last index where either side is
/// still irregular; beyond it both are single geometric terms, so the cross
/// terms collapse to two geometric series (tail x phi and geo_a x phi).
inline Rational pair_seq(const SeqRep& a, const SeqRep& phi) {
  seq_validate(a, "pair_seq");
  seq_validate(phi, "pair_seq");
  if (phi.space != SeqSpace::L1)
    fail(ErrorCode::SpaceMismatch, "pair_seq: functional side must be an l1 rep");
  if (a.space == SeqSpace::L1)
    fail(ErrorCode::SpaceMismatch, "pair_seq: sequence side must be c0, c or linf");

  long M = std::max(seq_max_explicit(a), seq_max_explicit(phi));
  if (a.geo) M = std::max(M, a.geo->start - 1);
  if (phi.geo) M = std::max(M, phi.geo->start - 1);

  Rational s(0);
  for (long i = 1; i <= M; ++i) s += seq_value(a, i) * seq_value(phi, i);
  if (phi.geo) {
    // Beyond M: phi_i = c r^(i - start) and a_i = tail (+ its own geometric
    // term), so the remainder is one or two geometric series.
    const Rational& c = phi.geo->coeff;
    const Rational& r = phi.geo->ratio;
    Rational lead = c * rat_pow(r, M + 1 - phi.geo->start);
    s += a.tail * lead / (Rational(1) - r);
    if (a.geo) {
      Rational lead_a = a.geo->coeff * rat_pow(a.geo->ratio, M + 1 - a.geo->start);
      s += lead_a * lead / (Rational(1) - a.geo->ratio * r);
    }
  }
  return s;
}

// A zero-coefficient or zero-ratio geometric tail is really a finite object;
// folding it away keeps case analysis elsewhere honest.
inline SeqRep seq_fold_degenerate_geo(SeqRep a) {
  if (a.geo && (a.geo->coeff == 0 || a.geo->ratio == 0)) {
    if (a.geo->coeff != 0) a.entries[a.geo->start] = a.tail + a.geo->coeff;
    a.geo.reset();
  }
  return a;
}

/// Pointwise equality of the represented sequences.
inline bool seq_eq(const SeqRep& a0, const SeqRep& b0) {
  seq_validate(a0, "seq_eq");
  seq_validate(b0, "seq_eq");
  SeqRep a = seq_fold_degenerate_geo(a0), b = seq_fold_degenerate_geo(b0);
  if (a.tail != b.tail) return false;
  const bool ga = a.geo.has_value(), gb = b.geo.has_value();
  long M = std::max(seq_max_explicit(a), seq_max_explicit(b));
  if (ga) M = std::max(M, a.geo->start - 1);
  if (gb) M = std::max(M, b.geo->start - 1);
  if (ga != gb) return false;  // one side leaves its limit infinitely often
  if (ga && gb) {
    long S = std::max(a.geo->start, b.geo->start);
    Rational ca = a.geo->coeff * rat_pow(a.geo->ratio, S - a.geo->start);
    Rational cb = b.geo->coeff * rat_pow(b.geo->ratio, S - b.geo->start);
    if (ca != cb || a.geo->ratio != b.geo->ratio) return false;
  }
  for (long i = 1; i <= M; ++i)
    if (seq_value(a, i) != seq_value(b, i)) return false;
  return true;
}

// A functional on c: limit_coeff * lim(x) + sum_i ell1_i x_i. This is the
// classical description of the dual of c; its norm is |limit_coeff| plus the
// l1 mass of the series part.
struct CDualRep {
  Rational limit_coeff;
  SeqRep ell1;  // must be an l1 rep
};

inline void c_dual_validate(const CDualRep& f, const char* where) {
  seq_validate(f.ell1, where);
  if (f.ell1.space != SeqSpace::L1)
    fail(ErrorCode::MalformedRep, std::string(where) + ": series part must be an l1 rep");
}

inline Rational c_dual_pair(const CDualRep& f, const SeqRep& a) {
  c_dual_validate(f, "c_dual_pair");
  seq_validate(a, "c_dual_pair");
  if (a.space != SeqSpace::C && a.space != SeqSpace::C0)
    fail(ErrorCode::SpaceMismatch, "c_dual_pair: argument must be a convergent-sequence rep");
  return f.limit_coeff * seq_limit(a) + pair_seq(a, f.ell1);
}

inline Rational c_dual_norm(const CDualRep& f) {
  c_dual_validate(f, "c_dual_norm");
  return rat_abs(f.limit_coeff) + seq_norm(f.ell1);
}

/// The limit functional x -> lim_i x_i, as an element of the dual of c.
/// Value of the tail-limit functional on a representable bounded sequence.
/// Linear in the representation and bounded by the sup norm; on c it agrees
/// with the honest limit. This is the constructive stand-in for a norm-one
/// extension of lim to all bounded sequences.
inline Rational lim_functional(const SeqRep& a) {
  seq_validate(a, "lim_functional");
  return a.tail;
}

}  // namespace bnou
