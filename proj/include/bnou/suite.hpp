#pragma once

// The property-suite runner and the release gate. Each module contributes a
// per-case invariant suite driven by one seeded generator; the gate is a
// fixed list of nine criteria with pinned sample counts and zero-tolerance
// comparisons. A deliberate-corruption hook (gauge_offset) shifts the gauge
// oracle so the harness's failure path stays testable end to end.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnou/counterexamples.hpp"
#include "bnou/figures.hpp"

namespace bnou {

struct CaseFailure {
  std::string suite;
  std::string what;
  json detail;
};

struct Recorder {
  long checks = 0;
  std::vector<CaseFailure> failures;

  void check(const std::string& suite, const std::string& what, bool ok,
             json detail = json::object()) {
    ++checks;
    if (!ok) failures.push_back({suite, what, std::move(detail)});
  }

  template <class F>
  void guard(const std::string& suite, const std::string& what, F&& body) {
    try {
      std::forward<F>(body)();
    } catch (const std::exception& e) {
      failures.push_back({suite, what + ": unexpected " + e.what(), json::object()});
    }
  }
};

namespace suite_detail {

template <class F>
inline bool throws_code(ErrorCode c, F&& body) {
  try {
    std::forward<F>(body)();
  } catch (const Error& e) {
    return e.code() == c;
  } catch (...) {
    return false;
  }
  return false;
}

inline Rational exact_norm(const SpaceDesc& s, const QVec& x) {
  NormBound nb = norm_value(s, x, Rational(0));
  if (!nb.exact()) throw std::logic_error("exact_norm: inexact kind");
  return nb.lower;
}

inline Rational exact_bn_norm(const BNElem& e) {
  NormBound nb = bn_norm(e, Rational(0));
  if (!nb.exact()) throw std::logic_error("exact_bn_norm: inexact kind");
  return nb.lower;
}

inline Rational exact_ou_norm(const OUElem& e) {
  NormBound nb = ou_norm(e, Rational(0));
  if (!nb.exact()) throw std::logic_error("exact_ou_norm: inexact kind");
  return nb.lower;
}

/// absco{(1,0), (0,1), (1,1)}; its gauge has the closed form
/// max(|x1|, |x2|, |x1 - x2|).
inline Polytope hexagon_ball() {
  return absolutely_convex_hull(
      2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
}

inline Rational hexagon_norm_closed_form(const QVec& x) {
  return rat_max(rat_max(rat_abs(x[0]), rat_abs(x[1])), rat_abs(x[0] - x[1]));
}

/// Unit ball of the base-norm construction over E: the absolutely convex
/// hull of Ball(E) placed at scalar coordinate 1.
inline Polytope bn_ball_polytope(const SpaceDesc& E) {
  const Polytope ball = ball_polytope(E);
  std::vector<QVec> pts;
  pts.reserve(ball.vertices.size());
  for (const QVec& v : ball.vertices) {
    QVec p = v;
    p.push_back(Rational(1));
    pts.push_back(std::move(p));
  }
  return absolutely_convex_hull(E.dim + 1, pts);
}

/// Unit ball of the order-unit construction over E: the order interval
/// [-u, u], i.e. absco of Ball(E) at scalar 0 together with the unit.
inline Polytope ou_ball_polytope(const SpaceDesc& E) {
  const Polytope ball = ball_polytope(E);
  std::vector<QVec> pts;
  pts.reserve(ball.vertices.size() + 1);
  for (const QVec& v : ball.vertices) {
    QVec p = v;
    p.push_back(Rational(0));
    pts.push_back(std::move(p));
  }
  QVec unit = vec_zero(static_cast<std::size_t>(E.dim) + 1);
  unit.back() = Rational(1);
  pts.push_back(std::move(unit));
  return absolutely_convex_hull(E.dim + 1, pts);
}

// 2D convex hull by monotone chain, as an independent oracle.
inline std::vector<QVec> monotone_chain_hull(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), qvec_lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const QVec& o, const QVec& a, const QVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<QVec> h;
  for (const QVec& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  std::sort(h.begin(), h.end(), qvec_lex_less);
  return h;
}

inline json qvec_detail(const char* key, const QVec& v) { return json{{key, vec_to_json(v)}}; }

}  // namespace suite_detail

// ---------------------------------------------------------------------------
// Per-module invariant suites
// ---------------------------------------------------------------------------

inline void suite_exact_core(RatGen& gen, long cases, Recorder& rec) {
  const std::string S = "exact-core";
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      const Rational q = gen.rational(6, 5);
      rec.check(S, "ceil brackets", rat_ceil(q) >= q && Rational(rat_ceil(q) - 1) < q);
      rec.check(S, "floor brackets", rat_floor(q) <= q && Rational(rat_floor(q) + 1) > q);
      rec.check(S, "ceil/floor reflection", rat_ceil(-q) == -rat_floor(q));

      Rational base = gen.rational(3, 3);
      if (base == 0) base = Rational(1, 2);
      const long a = gen.uniform(-3, 3), b = gen.uniform(-3, 3);
      rec.check(S, "pow splits sums", rat_pow(base, a + b) == rat_pow(base, a) * rat_pow(base, b));

      const long num = gen.uniform(-9, 9), den = gen.uniform(1, 9), k = gen.uniform(1, 4);
      rec.check(S, "make_rational normalizes",
                make_rational(Int(num * k), Int(den * k)) == make_rational(Int(num), Int(den)));

      // LP over the probability simplex: optimum is the smallest objective
      // coefficient; invariant under constraint row order by construction.
      const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 5));
      LinearProgram lp;
      lp.objective = gen.vec(n, 4, 4);
      lp.bounds.assign(n, VarBound{Rational(0), std::nullopt});
      lp.constraints.push_back(Constraint{QVec(n, Rational(1)), Rel::Eq, Rational(1)});
      lp.constraints.push_back(Constraint{QVec(n, Rational(1)), Rel::Le, Rational(2)});
      LPOutcome out = lp_solve(lp);
      Rational best = lp.objective[0];
      for (const Rational& c : lp.objective) best = rat_min(best, c);
      rec.check(S, "simplex minimum is the least coefficient",
                out.status == LPStatus::Optimal && out.optimum == best);
      std::swap(lp.constraints[0], lp.constraints[1]);
      LPOutcome out2 = lp_solve(lp);
      rec.check(S, "row order does not move the optimum",
                out2.status == LPStatus::Optimal && out2.optimum == best);
    });
}

inline void suite_convex_geometry(RatGen& gen, long cases, Recorder& rec) {
  using namespace suite_detail;
  const std::string S = "convex-geometry";
  const Polytope hex = hexagon_ball();
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      std::vector<QVec> pts;
      const long n = gen.uniform(3, 7);
      for (long i = 0; i < n; ++i) pts.push_back(gen.vec(2, 3, 3));
      Polytope hull = convex_hull(2, pts);
      std::vector<QVec> oracle = monotone_chain_hull(pts);
      rec.check(S, "hull matches monotone-chain oracle", hull.vertices == oracle);
      Polytope again = convex_hull(2, hull.vertices);
      rec.check(S, "hull is idempotent", polytope_eq(hull, again));

      const QVec x = gen.vec(2, 3, 4), y = gen.vec(2, 3, 4);
      const Rational gx = gauge(hex, x), gy = gauge(hex, y);
      rec.check(S, "gauge matches its closed form", gx == hexagon_norm_closed_form(x));
      rec.check(S, "gauge subadditive", gauge(hex, vec_add(x, y)) <= gx + gy);
      const Rational c = gen.positive_rational(3, 4);
      rec.check(S, "gauge positively homogeneous", gauge(hex, vec_scale(c, x)) == c * gx);
      rec.check(S, "membership at the gauge value", membership(hex, x, gx));
      if (gx > 0)
        rec.check(S, "no membership strictly inside the gauge value",
                  !membership(hex, x, gx - gx / 2));

      RadialReport rr = radial_check(hex);
      rec.check(S, "hexagon radially sound", rr.bounded && rr.compact && rr.absorbing);
      Polytope segment = absolutely_convex_hull(2, {QVec{Rational(1), Rational(0)}});
      rec.check(S, "degenerate segment is not absorbing", !radial_check(segment).absorbing);
    });
}

inline void suite_normed_spaces(RatGen& gen, long cases, Recorder& rec) {
  using namespace suite_detail;
  const std::string S = "normed-spaces";
  const std::vector<SpaceDesc> spaces{l1_space(2), l1_space(3), linf_space(2), linf_space(3),
                                      polytopal_space(hexagon_ball())};
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      const SpaceDesc& s = spaces[static_cast<std::size_t>(t) % spaces.size()];
      const std::size_t d = static_cast<std::size_t>(s.dim);
      const QVec x = gen.vec(d, 3, 4), phi = gen.vec(d, 3, 4);

      const Rational nx = exact_norm(s, x);
      const Rational nphi = exact_norm(dual_space(s), phi);
      rec.check(S, "pairing obeys the product bound", rat_abs(dot(x, phi)) <= nx * nphi);

      DualWitness w = dual_norm_witness(s, phi);
      rec.check(S, "witness attains the dual norm",
                w.value == nphi && dot(phi, w.point) == w.value,
                qvec_detail("phi", phi));
      rec.check(S, "witness point stays in the ball", norm_cmp(s, w.point, Rational(1)) != Cmp::Greater);

      rec.check(S, "norm_cmp agrees with norm_value",
                norm_cmp(s, x, nx) == Cmp::Equal &&
                    (nx == 0 || norm_cmp(s, x, nx / 2) == Cmp::Greater) &&
                    norm_cmp(s, x, nx + 1) == Cmp::Less);

      const Rational a = rat_abs(gen.rational(3, 4)), b = rat_abs(gen.rational(3, 4));
      rec.check(S, "direct sums reduce to scalar formulas",
                direct_sum_norm(NormKind::L1, a, b) == a + b &&
                    direct_sum_norm(NormKind::Linf, a, b) == rat_max(a, b));

      const QVec v = gen.vec(3, 3, 4);
      NormBound nb = norm_value(l2_space(3), v, Rational(1, 1000));
      const Rational sq = dot(v, v);
      rec.check(S, "euclidean enclosure brackets the square",
                nb.lower <= nb.upper && nb.upper - nb.lower <= Rational(1, 1000) &&
                    nb.lower * nb.lower <= sq && sq <= nb.upper * nb.upper);
    });
}

inline void suite_sequence_spaces(RatGen& gen, long cases, Recorder& rec) {
  const std::string S = "sequence-spaces";
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      const SeqRep a = gen.seq(SeqSpace::L1, 5, 3, 4, true);
      const SeqRep b = gen.finite_seq(SeqSpace::L1, 5, 3, 4);
      rec.check(S, "l1 triangle inequality", seq_norm(seq_add(a, b)) <= seq_norm(a) + seq_norm(b));
      const Rational c = gen.rational(3, 4);
      rec.check(S, "norm is absolutely homogeneous",
                seq_norm(seq_scale(c, a)) == rat_abs(c) * seq_norm(a));

      const SeqRep y = gen.seq(SeqSpace::Linf, 5, 3, 4, true);
      rec.check(S, "pairing obeys the product bound",
                rat_abs(pair_seq(y, a)) <= seq_norm(y) * seq_norm(a));
      rec.check(S, "pairing is additive in the summable slot",
                pair_seq(y, seq_add(a, b)) == pair_seq(y, a) + pair_seq(y, b));

      const long n = gen.uniform(1, 8);
      rec.check(S, "tail mass equals the truncation distance",
                seq_tail_l1(a, n) == seq_norm(seq_sub(a, seq_truncate(a, n))));

      // Representation independence: peel one geometric step into an
      // explicit entry and compare through every exact operation.
      if (a.geo) {
        SeqRep peeled = a;
        const GeoTail g = *peeled.geo;
        if (g.coeff != 0) peeled.entries[g.start] = g.coeff;
        peeled.geo = GeoTail{g.coeff * g.ratio, g.ratio, g.start + 1};
        rec.check(S, "peeled rep is the same sequence", seq_eq(a, peeled));
        rec.check(S, "norm is representation independent", seq_norm(a) == seq_norm(peeled));
        rec.check(S, "pairing is representation independent",
                  pair_seq(y, a) == pair_seq(y, peeled));
      }

      const CDualRep f{gen.rational(2, 4), gen.seq(SeqSpace::L1, 4, 2, 4, true)};
      const SeqRep z = gen.seq(SeqSpace::C, 4, 2, 4, true);
      rec.check(S, "convergent-dual pairing bounded by its norm",
                rat_abs(c_dual_pair(f, z)) <= c_dual_norm(f) * seq_norm(z));
      // Attainment up to an explicit tail residual: sign pattern on the
      // first K entries, limit sign beyond.
      const long K = 6;
      SeqRep sign = seq_zero(SeqSpace::C);
      const Rational lim_sign = f.limit_coeff >= 0 ? Rational(1) : Rational(-1);
      sign.tail = lim_sign;
      for (long i = 1; i <= K; ++i) {
        const Rational fi = seq_value(f.ell1, i);
        sign.entries[i] = fi > 0 ? Rational(1) : (fi < 0 ? Rational(-1) : lim_sign);
      }
      Rational head(0);
      for (long i = 1; i <= K; ++i) head += rat_abs(seq_value(f.ell1, i));
      const Rational got = c_dual_pair(f, sign);
      rec.check(S, "sign pattern nearly attains the norm",
                got >= rat_abs(f.limit_coeff) + head - seq_tail_l1(f.ell1, K) &&
                    got <= c_dual_norm(f));
    });
}

inline void suite_bn_ou(RatGen& gen, long cases, Recorder& rec) {
  using namespace suite_detail;
  const std::string S = "bn-ou";
  const std::vector<SpaceDesc> spaces{l1_space(2), linf_space(3), polytopal_space(hexagon_ball())};
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      const SpaceDesc& E = spaces[static_cast<std::size_t>(t) % spaces.size()];
      const std::size_t d = static_cast<std::size_t>(E.dim);

      const QVec x1 = gen.vec(d, 2, 4), x2 = gen.vec(d, 2, 4);
      const BNElem p1{E, x1, exact_norm(E, x1) + gen.positive_rational(2, 4)};
      const BNElem p2{E, x2, exact_norm(E, x2) + gen.positive_rational(2, 4)};
      rec.check(S, "cone members verify", bn_cone_member(p1) && bn_cone_member(p2));
      const BNElem sum{E, vec_add(x1, x2), p1.y + p2.y};
      rec.check(S, "cone closed under addition", bn_cone_member(sum));
      const Rational c = gen.positive_rational(2, 4);
      rec.check(S, "cone closed under scaling",
                bn_cone_member(BNElem{E, vec_scale(c, x1), c * p1.y}));
      rec.check(S, "trace is additive", bn_trace(sum) == bn_trace(p1) + bn_trace(p2));

      const QVec x = gen.vec(d, 2, 4);
      const Rational yv = gen.rational(2, 4);
      const BNElem e{E, x, yv};
      const Rational r = exact_bn_norm(e) + rat_abs(gen.rational(1, 4));
      auto [plus, minus] = bn_positive_decompose(e, r);
      rec.check(S, "decomposition parts are positive",
                bn_cone_member(plus) && bn_cone_member(minus));
      rec.check(S, "decomposition recombines",
                payload_eq(E, payload_sub(E, plus.x, minus.x), Payload(x)) &&
                    plus.y - minus.y == yv);
      rec.check(S, "bound below the norm is refused",
                r == 0 || throws_code(ErrorCode::BoundTooSmall,
                                      [&] { bn_positive_decompose(e, -r - 1); }));

      const OUElem o{E, x, yv};
      const Int n = ou_order_bound(o, exact_norm(E, x) + rat_abs(gen.rational(1, 4)));
      const OUElem dom{E, payload_zero(E), Rational(n)};
      rec.check(S, "order bound dominates", ou_le(o, dom));

      const OUElem zero{E, payload_zero(E), Rational(0)};
      rec.check(S, "effect interval is the order interval",
                effect_member(o) == (ou_le(zero, o) && ou_le(o, ou_unit(SpaceRef(E)))));

      const Rational nb = exact_bn_norm(e);
      const Rational no = exact_ou_norm(o);
      rec.check(S, "construction norms scale", exact_bn_norm(BNElem{E, vec_scale(c, x), c * yv}) == c * nb);
      rec.check(S, "order-unit norm dominates the base-norm one", no >= nb);
    });
}

inline void suite_duality(RatGen& gen, long cases, Recorder& rec) {
  using namespace suite_detail;
  const std::string S = "duality";
  const std::vector<SpaceDesc> spaces{l1_space(2), linf_space(3), polytopal_space(hexagon_ball())};
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      const SpaceDesc& E = spaces[static_cast<std::size_t>(t) % spaces.size()];
      const SpaceDesc Ed = dual_space(E);
      const std::size_t d = static_cast<std::size_t>(E.dim);

      const OUElem a{E, gen.vec(d, 2, 4), gen.rational(2, 4)};
      const OUElem b{E, gen.vec(d, 2, 4), gen.rational(2, 4)};
      const BNElem g{Ed, gen.vec(d, 2, 4), gen.rational(2, 4)};
      const Rational c = gen.rational(2, 4);
      rec.check(S, "pairing additive on the left",
                pair(ou_add(a, b), g) == pair(a, g) + pair(b, g));
      rec.check(S, "pairing homogeneous on the left",
                pair(OUElem{E, payload_scale(SpaceRef(E), c, a.x), c * a.lam}, g) ==
                    c * pair(a, g));
      rec.check(S, "lev application is the pairing", apply(lev(g), a) == pair(a, g));
      rec.check(S, "ev application is the pairing", apply(ev(a), g) == pair(g, a));
      rec.check(S, "paired elements evaluate identically",
                pair(make_paired(a, g)) == pair(a, g));

      // Positivity of lev(g) against the base scan.
      const Functional f = lev(g);
      auto wit = functional_negativity_witness(f);
      const bool pos = functional_is_positive(f);
      rec.check(S, "negativity witness complements positivity", pos == !wit.has_value());
      if (wit) {
        rec.check(S, "witness value is negative and matches", wit->value < 0);
        rec.check(S, "witness point lies on the base",
                  ou_cone_member(wit->point) && wit->point.lam == 1);
      }

      // Ball extension round trip plus the inconsistent-values error path.
      if (E.kind != NormKind::L1 || E.dim <= 3) {
        const SpaceDesc ball_space = E.kind == NormKind::L1 ? linf_space(2) : E;
        const std::size_t bd = static_cast<std::size_t>(ball_space.dim);
        const QVec psi = gen.vec(bd, 2, 4);
        AffineOnBall aff{ball_space, {}};
        for (const QVec& v : ball_polytope(ball_space).vertices) aff.vertex_values[v] = dot(psi, v);
        rec.check(S, "ball extension recovers the functional", ball_extension(aff) == psi);
        const QVec pt = gen.vec(bd, 2, 4);
        rec.check(S, "formula route equals the linear value",
                  ball_extension_formula(aff, pt) == dot(psi, pt));
        AffineOnBall broken = aff;
        broken.vertex_values.begin()->second += 1;
        rec.check(S, "non-linear vertex values are rejected",
                  throws_code(ErrorCode::InconsistentValues, [&] { ball_extension(broken); }));

        const Rational a0 = gen.rational(2, 4);
        AffineOnBall shifted = aff;
        for (auto& [v, val] : shifted.vertex_values) val += a0;
        OUElem eff = effect_to_ou(shifted, a0);
        rec.check(S, "effect extraction recovers the data",
                  std::get<QVec>(eff.x) == psi && eff.lam == a0);
      }

      const QVec bx = gen.vec(3, 2, 4);
      const OUElem bloch{l2_space(3), bx, gen.rational(2, 4)};
      rec.check(S, "closed-form cone test agrees",
                bloch_psd_check(bloch) == ou_cone_member(bloch));
    });
}

inline void suite_scott_order(RatGen& gen, long cases, Recorder& rec) {
  const std::string S = "scott-order";
  for (long t = 0; t < cases; ++t)
    rec.guard(S, "case " + std::to_string(t), [&] {
      SeqRep target = gen.seq(SeqSpace::L1, 5, 2, 4, true);
      const Rational mu = seq_norm(target) + gen.positive_rational(2, 4);
      const TruncationChain chain = make_chain(OUElem{SeqSpace::L1, target, mu});

      const long k = gen.uniform(2, 6);
      FiniteFamily fam;
      for (long n = 1; n <= k; ++n) fam.elements.push_back(chain_element(chain, n));
      rec.check(S, "chain prefixes are directed", is_directed(fam));
      const OUElem sup = finite_directed_sup(fam);
      rec.check(S, "finite supremum is the last element",
                payload_eq(sup.space, sup.x, fam.elements.back().x) &&
                    sup.lam == fam.elements.back().lam);

      for (long n = 1; n < k; ++n)
        rec.check(S, "chain is monotone",
                  ou_le(chain_element(chain, n), chain_element(chain, n + 1)));
      rec.check(S, "chain sits below its supremum", ou_le(chain_element(chain, k), chain_sup(chain)));
      rec.check(S, "distance is twice the tail",
                chain_distance(chain, k) == 2 * seq_tail_l1(target, k));

      const Rational eps = gen.positive_rational(2, 6);
      const long N = verify_norm_convergence(chain, eps);
      rec.check(S, "first index beating eps is minimal",
                chain_distance(chain, N) < eps && (N == 1 || chain_distance(chain, N - 1) >= eps));

      SeqRep phim = gen.seq(SeqSpace::Linf, 4, 2, 4, true);
      const Rational scal = seq_norm(phim) + rat_abs(gen.rational(1, 4));
      const Functional f = lev(BNElem{SeqSpace::Linf, phim, scal});
      const ConvergenceReport rep = scott_continuity_check(f, chain, 8);
      rec.check(S, "positive residual trace certified",
                rep.nonnegative && rep.monotone && rep.bounded);
      rec.check(S, "residuals recompute",
                rep.residuals[3].second ==
                    rep.value_at_sup - apply(f, chain_element(chain, 4)));

      SeqRep ex = gen.seq(SeqSpace::C0, 4, 2, 4, true);
      const NormalityReport nr =
          ev_is_normal_check(BNElem{SeqSpace::C0, ex, gen.rational(2, 4)}, chain, 8);
      rec.check(S, "normality decomposition is consistent",
                nr.decomposition_consistent && nr.positive_part.monotone &&
                    nr.negative_part.monotone && nr.combined.bounded);

      FiniteFamily bad;
      bad.elements.push_back(OUElem{SeqSpace::L1, cx_detail::basis_seq(SeqSpace::L1, 1), Rational(1)});
      bad.elements.push_back(OUElem{SeqSpace::L1, cx_detail::basis_seq(SeqSpace::L1, 2), Rational(1)});
      rec.check(S, "incomparable pair is not directed", !is_directed(bad));
      rec.check(S, "supremum of a non-directed family is refused",
                suite_detail::throws_code(ErrorCode::NotDirected,
                                          [&] { finite_directed_sup(bad); }));
    });
}

inline void suite_counterexample_cli(RatGen& gen, long cases, Recorder& rec) {
  const std::string S = "counterexample-cli";
  const long n = std::max<long>(1, cases / 10);
  rec.guard(S, "cx harnesses", [&] {
    rec.check(S, "separation from evaluations holds", cx1_run(n, gen.raw()).verdict);
    rec.check(S, "effect outside the embedding holds", cx2_run(n, gen.raw()).verdict);
    rec.check(S, "predual non-uniqueness holds", cx3_run(n, gen.raw()).verdict);
  });
  rec.guard(S, "figures", [&] {
    rec.check(S, "unknown figure is refused",
              suite_detail::throws_code(ErrorCode::UnknownFigure,
                                        [&] { emit_figure(5, CoordConvention::Axes); }));
    for (const QVec& p : unit_circle_samples(5))
      rec.check(S, "circle samples sit on the circle", p[0] * p[0] + p[1] * p[1] == 1);
    rec.check(S, "circle parameter 1 is the top point",
              circle_point(Rational(1)) == QVec{Rational(0), Rational(1)});
    for (int which = 1; which <= 4; ++which)
      for (CoordConvention conv : {CoordConvention::TraceVertical, CoordConvention::Axes}) {
        const std::string j1 = figure_to_json(emit_figure(which, conv)).dump(2);
        const std::string j2 = figure_to_json(emit_figure(which, conv)).dump(2);
        const std::string s1 = figure_to_svg(emit_figure(which, conv));
        const std::string s2 = figure_to_svg(emit_figure(which, conv));
        rec.check(S, "figure emission is deterministic", j1 == j2 && s1 == s2);
      }
  });
  rec.guard(S, "json round trips", [&] {
    for (long t = 0; t < std::max<long>(4, cases / 4); ++t) {
      const SeqRep a = gen.seq(SeqSpace::C, 5, 3, 4, true);
      rec.check(S, "sequence rep round trip",
                seqrep_to_json(seqrep_from_json(seqrep_to_json(a))) == seqrep_to_json(a));
      const BNElem e{SeqSpace::C0, gen.seq(SeqSpace::C0, 4, 2, 4, true), gen.rational(2, 4)};
      rec.check(S, "element round trip", bn_to_json(bn_from_json(bn_to_json(e))) == bn_to_json(e));
      const Functional f = lev(BNElem{l1_space(2), gen.vec(2, 3, 4), gen.rational(2, 4)});
      rec.check(S, "functional round trip",
                functional_to_json(functional_from_json(functional_to_json(f))) ==
                    functional_to_json(f));
      const Polytope p = suite_detail::hexagon_ball();
      rec.check(S, "polytope round trip",
                polytope_to_json(polytope_from_json(polytope_to_json(p))) == polytope_to_json(p));
      const SpaceDesc sd = dual_space(polytopal_space(suite_detail::hexagon_ball()));
      rec.check(S, "space descriptor round trip",
                space_to_json(space_from_json(space_to_json(sd))) == space_to_json(sd));
    }
  });
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace suite_detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace suite_detail

/// Criterion 1: closed-form construction norms against the gauge of the
/// explicitly built unit-ball polytope, 500 points per space, exact.
inline CriterionResult criterion_norm_vs_gauge(std::uint64_t seed, const Rational& gauge_offset) {
  using namespace suite_detail;
  const auto t0 = std::chrono::steady_clock::now();
  RatGen gen(seed);
  CriterionResult res{1, "norm formulas equal the gauge oracle", true, ""};

  const SpaceDesc linf2 = linf_space(2);
  const SpaceDesc hexsp = polytopal_space(hexagon_ball());
  const SpaceDesc l12 = l1_space(2);
  const Polytope bn_linf = bn_ball_polytope(linf2);
  const Polytope bn_hex = bn_ball_polytope(hexsp);
  const Polytope ou_l1 = ou_ball_polytope(l12);

  long bad = 0;
  for (int w = 0; w < 3 && res.pass; ++w) {
    for (long t = 0; t < 500; ++t) {
      const QVec x = gen.vec(2, 2, 4);
      const Rational scal = gen.rational(2, 4);
      QVec p = x;
      p.push_back(scal);
      Rational closed, lib;
      const Polytope* ball = nullptr;
      if (w == 0) {
        closed = rat_max(rat_max(rat_abs(x[0]), rat_abs(x[1])), rat_abs(scal));
        lib = exact_bn_norm(BNElem{linf2, x, scal});
        ball = &bn_linf;
      } else if (w == 1) {
        closed = rat_max(hexagon_norm_closed_form(x), rat_abs(scal));
        lib = exact_bn_norm(BNElem{hexsp, x, scal});
        ball = &bn_hex;
      } else {
        closed = rat_abs(x[0]) + rat_abs(x[1]) + rat_abs(scal);
        lib = exact_ou_norm(OUElem{l12, x, scal});
        ball = &ou_l1;
      }
      const Rational oracle = gauge(*ball, p) + gauge_offset;
      if (!(closed == lib && lib == oracle)) {
        ++bad;
        if (res.detail.empty())
          res.detail = "mismatch at point " +
                       json{{"point", vec_to_json(p)},
                            {"closed_form", rat_str(closed)},
                            {"library", rat_str(lib)},
                            {"gauge", rat_str(oracle)}}
                           .dump();
        res.pass = false;
        break;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed > 10.0) {
    res.pass = false;
    res.detail += " exceeded 10 s";
  }
  if (res.pass) res.detail = "1500 points, three spaces, exact";
  (void)bad;
  return res;
}

/// Criterion 2: state round trips and the exact order-embedding boundary.
inline CriterionResult criterion_duality_round_trip(std::uint64_t seed) {
  using namespace suite_detail;
  RatGen gen(seed);
  CriterionResult res{2, "duality round trip and order embedding", true, ""};
  const std::vector<SpaceDesc> spaces{l1_space(3), linf_space(3),
                                      polytopal_space(hexagon_ball())};

  for (const SpaceDesc& E : spaces) {
    const SpaceDesc Ed = dual_space(E);
    const std::size_t d = static_cast<std::size_t>(E.dim);
    for (long t = 0; t < 200 && res.pass; ++t) {
      QVec phi = gen.vec(d, 3, 4);
      const Rational n = exact_norm(Ed, phi);
      if (n > 0) {
        const Rational shrink = rat_abs(gen.unit_rational(4));
        phi = vec_scale(shrink / n, phi);
      }
      const BNElem rep{Ed, phi, Rational(1)};
      const Functional f = lev(rep);
      if (!functional_is_state(f)) {
        res.pass = false;
        res.detail = "scaled representer failed the state test";
        break;
      }
      const BNElem back = state_to_bn(f);
      if (!(payload_eq(back.space, back.x, rep.x) && back.y == 1 &&
            spaceref_eq(back.space, rep.space))) {
        res.pass = false;
        res.detail = "state did not round trip";
        break;
      }
    }
  }

  long done = 0;
  while (done < 500 && res.pass) {
    const SpaceDesc& E = spaces[static_cast<std::size_t>(done) % spaces.size()];
    const SpaceDesc Ed = dual_space(E);
    const QVec phi = gen.vec(static_cast<std::size_t>(E.dim), 3, 4);
    const Rational n = exact_norm(Ed, phi);
    Rational mu;
    const int mode = static_cast<int>(done % 3);
    if (mode == 0)
      mu = n;  // exact boundary
    else if (mode == 1)
      mu = n + gen.positive_rational(2, 4);
    else
      mu = n - gen.positive_rational(2, 4);
    const Functional f = lev(BNElem{Ed, phi, mu});
    const bool expected = mu >= n;
    const bool claimed = functional_is_positive(f);
    const auto wit = functional_negativity_witness(f);
    if (claimed != expected || wit.has_value() == expected ||
        (wit && !(wit->value < 0 && ou_cone_member(wit->point) && wit->point.lam == 1))) {
      res.pass = false;
      res.detail = "order embedding failed at mu " + rat_str(mu) + ", norm " + rat_str(n);
    }
    ++done;
  }
  if (res.pass) res.detail = "600 round trips, 500 embedding samples with exact boundaries";
  return res;
}

/// Criterion 3: the vertex-solved extension is linear and matches the
/// norm-scaling formula on 300 inputs.
inline CriterionResult criterion_ball_extension(std::uint64_t seed) {
  using namespace suite_detail;
  RatGen gen(seed);
  CriterionResult res{3, "ball extension is exactly linear", true, ""};
  const std::vector<SpaceDesc> spaces{linf_space(2), linf_space(3),
                                      polytopal_space(hexagon_ball())};
  for (const SpaceDesc& sp : spaces) {
    const std::size_t d = static_cast<std::size_t>(sp.dim);
    const Polytope ball = ball_polytope(sp);
    for (long t = 0; t < 100 && res.pass; ++t) {
      const QVec psi = gen.vec(d, 3, 4);
      AffineOnBall aff{sp, {}};
      for (const QVec& v : ball.vertices) aff.vertex_values[v] = dot(psi, v);
      if (ball_extension(aff) != psi) {
        res.pass = false;
        res.detail = "vertex solve missed the functional";
        break;
      }
      const QVec x = gen.vec(d, 2, 4), y = gen.vec(d, 2, 4);
      const Rational cx = gen.rational(3, 4);
      const Rational fx = ball_extension_formula(aff, x);
      const Rational fy = ball_extension_formula(aff, y);
      const Rational fxy = ball_extension_formula(aff, vec_add(x, y));
      const Rational fcx = ball_extension_formula(aff, vec_scale(cx, x));
      bool vertex_ok = true;
      for (const QVec& v : ball.vertices)
        if (dot(psi, v) != aff.vertex_values.at(v)) vertex_ok = false;
      if (!(fx == dot(psi, x) && fxy == fx + fy && fcx == cx * fx && vertex_ok)) {
        res.pass = false;
        res.detail = "additivity/homogeneity failed";
      }
    }
  }
  if (res.pass) res.detail = "300 inputs over three balls, exact";
  return res;
}

/// Criterion 4: the geometric truncation chain's pinned numbers.
inline CriterionResult criterion_chain_numbers(std::uint64_t) {
  CriterionResult res{4, "geometric chain convergence numbers", true, ""};
  SeqRep x = seq_zero(SeqSpace::L1);
  x.geo = GeoTail{Rational(1, 2), Rational(1, 2), 1};
  const TruncationChain chain = make_chain(OUElem{SeqSpace::L1, x, Rational(2)});
  if (verify_norm_convergence(chain, Rational(1, 100)) != 8) {
    res.pass = false;
    res.detail = "N(1/100) != 8";
    return res;
  }
  if (verify_norm_convergence(chain, Rational(3)) != 1) {
    res.pass = false;
    res.detail = "N(3) != 1";
    return res;
  }
  const Functional one =
      lev(BNElem{SeqSpace::Linf, seq_const(SeqSpace::Linf, Rational(1)), Rational(1)});
  const ConvergenceReport rep = scott_continuity_check(one, chain, 32);
  if (rep.value_at_sup != 3) {
    res.pass = false;
    res.detail = "value at the supremum is not 3";
    return res;
  }
  for (long n = 1; n <= 32; ++n)
    if (rep.residuals[static_cast<std::size_t>(n - 1)].second != rat_pow(Rational(2), 1 - n)) {
      res.pass = false;
      res.detail = "residual at n = " + std::to_string(n) + " is not 2^(1-n)";
      return res;
    }
  const ConvergenceReport zero_rep = scott_continuity_check(
      lev(BNElem{SeqSpace::Linf, seq_zero(SeqSpace::Linf), Rational(1)}), chain, 16);
  for (long n = 1; n <= 16; ++n)
    if (zero_rep.residuals[static_cast<std::size_t>(n - 1)].second != rat_pow(Rational(2), -n)) {
      res.pass = false;
      res.detail = "scalar-only residual at n = " + std::to_string(n) + " is not 2^-n";
      return res;
    }
  res.detail = "N(1/100) = 8, residuals exact through n = 32";
  return res;
}

inline CriterionResult criterion_cx1(std::uint64_t seed) {
  using namespace suite_detail;
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult res{5, "no evaluation matches the chosen state", true, ""};
  const CxReport rep = cx1_run(1000, seed);
  res.pass = rep.verdict;
  for (const CxWitness& w : rep.witnesses)
    if (!(w.rhs == 1 && w.lhs != 1)) res.pass = false;
  const double elapsed = seconds_since(t0);
  if (elapsed > 5.0) {
    res.pass = false;
    res.detail = "exceeded 5 s";
  } else {
    res.detail = res.pass ? "1000 witnesses, exact, with state and continuity certificates"
                          : "a witness failed";
  }
  return res;
}

inline CriterionResult criterion_cx2(std::uint64_t seed) {
  CriterionResult res{6, "the chosen effect escapes the embedding", true, ""};
  const CxReport rep = cx2_run(1000, seed);
  res.pass = rep.verdict;
  for (const CxWitness& w : rep.witnesses) {
    const Rational gap = rat_abs(w.lhs - w.rhs);
    if (!(gap > 0)) res.pass = false;
    const bool finite_input = w.input.contains("geo") && w.input["geo"].is_null();
    if (finite_input && gap < Rational(1, 4)) res.pass = false;
  }
  res.detail = res.pass ? "1000 witnesses, gap at least 1/4 throughout" : "a witness failed";
  return res;
}

inline CriterionResult criterion_cx3(std::uint64_t seed) {
  CriterionResult res{7, "dual agreement with distinct predual geometry", true, ""};
  const CxReport rep = cx3_run(200, seed);
  res.pass = rep.verdict;
  res.detail = res.pass ? "200 samples per part, exact" : "a witness failed";
  return res;
}

inline CriterionResult criterion_bloch(std::uint64_t seed) {
  CriterionResult res{8, "euclidean cone equals the closed-form test", true, ""};
  std::set<Rational> axis, lams;
  for (long den = 1; den <= 4; ++den) {
    for (long k = -2 * den; k <= 2 * den; ++k) axis.insert(make_rational(Int(k), Int(den)));
    for (long k = 0; k <= 2 * den; ++k) lams.insert(make_rational(Int(k), Int(den)));
  }
  const SpaceDesc sp = l2_space(3);
  long n = 0;
  for (const Rational& a : axis)
    for (const Rational& b : axis)
      for (const Rational& c : axis)
        for (const Rational& lam : lams) {
          const OUElem e{sp, QVec{a, b, c}, lam};
          if (bloch_psd_check(e) != ou_cone_member(e)) {
            res.pass = false;
            res.detail = "grid disagreement at (" + rat_str(a) + "," + rat_str(b) + "," +
                         rat_str(c) + ";" + rat_str(lam) + ")";
            return res;
          }
          ++n;
        }
  RatGen gen(seed);
  for (long t = 0; t < 1000; ++t) {
    const OUElem e{sp, gen.vec(3, 2, 4), gen.rational(2, 4)};
    if (bloch_psd_check(e) != ou_cone_member(e)) {
      res.pass = false;
      res.detail = "random disagreement";
      return res;
    }
  }
  res.detail = std::to_string(n) + " grid points plus 1000 samples, exact";
  return res;
}

inline CriterionResult criterion_figures(std::uint64_t) {
  CriterionResult res{9, "figure geometry pinned and byte-stable", true, ""};
  const FigureGeometry f2 = emit_figure(2, CoordConvention::Axes);
  const QVec e1{Rational(1), Rational(0), Rational(0)};
  const QVec e2{Rational(0), Rational(1), Rational(0)};
  const QVec e3{Rational(0), Rational(0), Rational(1)};
  bool ok = f2.vertex_sets.size() >= 2 && f2.vertex_sets[0].name == "base_vertices" &&
            f2.vertex_sets[0].points == std::vector<QVec>{e1, e2, e3} &&
            f2.vertex_sets[1].name == "ball_vertices" &&
            f2.vertex_sets[1].points ==
                std::vector<QVec>{e1, e2, e3, vec_neg(e1), vec_neg(e2), vec_neg(e3)};
  if (!ok) {
    res.pass = false;
    res.detail = "octahedron vertex lists wrong";
    return res;
  }

  const FigureGeometry f4 = emit_figure(4, CoordConvention::Axes);
  const std::vector<QVec> cycle{
      {Rational(1), Rational(0), Rational(0)}, {Rational(1), Rational(1), Rational(0)},
      {Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)},
      {Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(1)}};
  bool found = false;
  for (const Polyline& l : f4.polylines)
    if (l.name == "zigzag") found = l.closed && l.points == cycle;
  if (!found) {
    res.pass = false;
    res.detail = "hexagonal cycle wrong";
    return res;
  }

  for (int which = 1; which <= 4; ++which)
    for (CoordConvention conv : {CoordConvention::TraceVertical, CoordConvention::Axes}) {
      const std::string a = figure_to_json(emit_figure(which, conv)).dump(2);
      const std::string b = figure_to_json(emit_figure(which, conv)).dump(2);
      if (a != b) {
        res.pass = false;
        res.detail = "emission not byte-stable";
        return res;
      }
    }
  res.detail = "vertex lists pinned, JSON byte-stable";
  return res;
}

inline std::vector<CriterionResult> run_acceptance_criteria(std::uint64_t seed,
                                                            const Rational& gauge_offset =
                                                                Rational(0)) {
  return {criterion_norm_vs_gauge(seed, gauge_offset),
          criterion_duality_round_trip(seed + 1),
          criterion_ball_extension(seed + 2),
          criterion_chain_numbers(seed + 3),
          criterion_cx1(seed + 4),
          criterion_cx2(seed + 5),
          criterion_cx3(seed + 6),
          criterion_bloch(seed + 7),
          criterion_figures(seed + 8)};
}

// ---------------------------------------------------------------------------
// Full run
// ---------------------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 20260819;
  long cases = 100;
  Rational gauge_offset;  // nonzero = deliberate corruption of the gauge oracle
};

struct SuiteResult {
  std::uint64_t seed = 0;
  long cases = 0;
  long checks = 0;
  std::vector<CriterionResult> criteria;
  std::vector<CaseFailure> failures;

  bool ok() const {
    if (!failures.empty()) return false;
    for (const CriterionResult& c : criteria)
      if (!c.pass) return false;
    return true;
  }
};

inline SuiteResult run_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) fail(ErrorCode::EmptyInput, "run_suite: cases must be at least 1");
  SuiteResult result;
  result.seed = opt.seed;
  result.cases = opt.cases;

  Recorder rec;
  RatGen gen(opt.seed);
  suite_exact_core(gen, opt.cases, rec);
  suite_convex_geometry(gen, opt.cases, rec);
  suite_normed_spaces(gen, opt.cases, rec);
  suite_sequence_spaces(gen, opt.cases, rec);
  suite_bn_ou(gen, opt.cases, rec);
  suite_duality(gen, opt.cases, rec);
  suite_scott_order(gen, opt.cases, rec);
  suite_counterexample_cli(gen, opt.cases, rec);

  result.criteria = run_acceptance_criteria(opt.seed, opt.gauge_offset);
  result.checks = rec.checks;
  result.failures = std::move(rec.failures);
  return result;
}

inline json suite_result_to_json(const SuiteResult& r) {
  json crits = json::array();
  for (const CriterionResult& c : r.criteria)
    crits.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json fails = json::array();
  for (const CaseFailure& f : r.failures)
    fails.push_back(json{{"suite", f.suite}, {"what", f.what}, {"detail", f.detail}});
  json j;
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["checks"] = r.checks;
  j["criteria"] = std::move(crits);
  j["failures"] = std::move(fails);
  j["ok"] = r.ok();
  return j;
}

}  // namespace bnou
