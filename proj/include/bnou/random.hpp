#pragma once

// Seeded deterministic sampling of rationals, vectors, and sequence reps.
// mt19937_64 with manual range reduction, so the same seed yields the same
// stream on every platform and standard library; the suite and the
// counterexample reports depend on that.

#include <cstdint>
#include <random>

#include "bnou/rational.hpp"
#include "bnou/sequences.hpp"
#include "bnou/vec.hpp"

namespace bnou {

class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
  /// here; reproducibility is the contract.
  long uniform(long lo, long hi) {
    if (hi < lo) fail(ErrorCode::EmptyInput, "RatGen::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(raw() % span);
  }

  bool coin() { return (raw() & 1u) != 0; }

  /// p/q with |p| <= max_abs_num and 1 <= q <= max_den.
  Rational rational(long max_abs_num, long max_den) {
    return make_rational(Int(uniform(-max_abs_num, max_abs_num)), Int(uniform(1, max_den)));
  }

  /// Value in [-1, 1] with denominator at most max_den.
  Rational unit_rational(long max_den) {
    const long q = uniform(1, max_den);
    return make_rational(Int(uniform(-q, q)), Int(q));
  }

  /// Strictly positive value at most max_abs_num.
  Rational positive_rational(long max_abs_num, long max_den) {
    const long q = uniform(1, max_den);
    return make_rational(Int(uniform(1, max_abs_num * q)), Int(q));
  }

  QVec vec(std::size_t dim, long max_abs_num, long max_den) {
    QVec v(dim);
    for (auto& c : v) c = rational(max_abs_num, max_den);
    return v;
  }

  /// Point of the unit ball of the given finite-dimensional norm kind:
  /// coordinates in [-1,1] scaled down to the ball when needed.
  QVec ball_vec_linf(std::size_t dim, long max_den) {
    QVec v(dim);
    for (auto& c : v) c = unit_rational(max_den);
    return v;
  }

  /// Finitely supported rep: zero tail, no geometric part.
  SeqRep finite_seq(SeqSpace sp, long max_support, long max_abs_num, long max_den) {
    SeqRep r = seq_zero(sp);
    const long hi = uniform(0, max_support);
    for (long i = 1; i <= hi; ++i)
      if (coin()) {
        Rational v = rational(max_abs_num, max_den);
        if (v != 0) r.entries[i] = std::move(v);
      }
    return r;
  }

  GeoTail geo_tail(long start_min, long max_abs_num, long max_den) {
    Rational ratio(0);
    while (ratio == 0) {
      const long q = uniform(2, max_den < 2 ? 2 : max_den);
      ratio = make_rational(Int(uniform(-(q - 1), q - 1)), Int(q));
    }
    Rational coeff(0);
    while (coeff == 0) coeff = rational(max_abs_num, max_den);
    return GeoTail{std::move(coeff), std::move(ratio), start_min + uniform(0, 2)};
  }

  /// General rep for the space: finite part, optional geometric tail, and
  /// (for convergent/bounded kinds) an optional nonzero limit.
  SeqRep seq(SeqSpace sp, long max_support, long max_abs_num, long max_den, bool allow_geo) {
    SeqRep r = finite_seq(sp, max_support, max_abs_num, max_den);
    if ((sp == SeqSpace::C || sp == SeqSpace::Linf) && coin())
      r.tail = rational(max_abs_num, max_den);
    if (allow_geo && uniform(0, 3) == 0)
      r.geo = geo_tail(seq_max_explicit(r) + 1, max_abs_num, max_den);
    seq_validate(r, "RatGen::seq");
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bnou
