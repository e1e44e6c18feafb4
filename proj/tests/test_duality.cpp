#include <catch2/catch_amalgamated.hpp>

#include "bnou/duality.hpp"
#include "bnou/random.hpp"

using namespace bnou;

namespace {

const SpaceDesc LINF2 = linf_space(2);
const SpaceDesc L12 = l1_space(2);

Polytope square_ball() { return ball_polytope(linf_space(2)); }

}  // namespace

TEST_CASE("the pairing formula") {
  const OUElem l{LINF2, QVec{Rational(1), Rational(2)}, Rational(3)};
  const BNElem r{L12, QVec{Rational(4), Rational(5)}, Rational(6)};
  CHECK(pair(l, r) == Rational(32));

  // mu = 0 kills the scalar term
  const BNElem r0{L12, QVec{Rational(4), Rational(5)}, Rational(0)};
  CHECK(pair(l, r0) == Rational(14));

  // the unit picks out the scalar of the other side
  const OUElem u = ou_unit(SpaceRef(LINF2));
  CHECK(pair(u, r) == Rational(6));

  CHECK_THROWS_AS(pair(l, BNElem{LINF2, QVec{Rational(1), Rational(0)}, Rational(0)}), Error);
}

TEST_CASE("paired elements check compatibility at construction") {
  const OUElem l{LINF2, QVec{Rational(1), Rational(0)}, Rational(1)};
  const BNElem r{L12, QVec{Rational(1), Rational(0)}, Rational(1)};
  const PairedElem pe = make_paired(l, r);
  CHECK(pair(pe) == pair(l, r));
  CHECK_THROWS_AS(make_paired(l, BNElem{linf_space(3), vec_zero(3), Rational(0)}), Error);
}

TEST_CASE("pairing is bilinear") {
  RatGen gen(801);
  for (int t = 0; t < 60; ++t) {
    const OUElem a{LINF2, gen.vec(2, 3, 4), gen.rational(3, 4)};
    const OUElem b{LINF2, gen.vec(2, 3, 4), gen.rational(3, 4)};
    const BNElem g{L12, gen.vec(2, 3, 4), gen.rational(3, 4)};
    const Rational c = gen.rational(3, 4);
    CHECK(pair(ou_add(a, b), g) == pair(a, g) + pair(b, g));
    const OUElem ca{LINF2, vec_scale(c, std::get<QVec>(a.x)), c * a.lam};
    CHECK(pair(ca, g) == c * pair(a, g));
    const BNElem cg{L12, vec_scale(c, std::get<QVec>(g.x)), c * g.y};
    CHECK(pair(a, cg) == c * pair(a, g));
  }
}

TEST_CASE("lev and ev apply through the pairing") {
  RatGen gen(802);
  for (int t = 0; t < 40; ++t) {
    const OUElem a{LINF2, gen.vec(2, 3, 4), gen.rational(3, 4)};
    const BNElem g{L12, gen.vec(2, 3, 4), gen.rational(3, 4)};
    CHECK(apply(lev(g), a) == pair(a, g));
    CHECK(apply(ev(a), g) == pair(g, a));
  }
  // lev(0,1) reads off the scalar coordinate
  const Functional unit_lev = lev(BNElem{L12, vec_zero(2), Rational(1)});
  for (int t = 0; t < 20; ++t) {
    const OUElem a{LINF2, gen.vec(2, 3, 4), gen.rational(3, 4)};
    CHECK(apply(unit_lev, a) == a.lam);
  }
}

TEST_CASE("positivity of lev is the dual-norm comparison") {
  // representer with sup-norm 2 against scalar 1: not positive
  const Functional bad = lev(BNElem{LINF2, QVec{Rational(2), Rational(0)}, Rational(1)});
  CHECK(!functional_is_positive(bad));
  const auto wit = functional_negativity_witness(bad);
  REQUIRE(wit.has_value());
  CHECK(wit->value < 0);
  CHECK(ou_cone_member(wit->point));
  CHECK(wit->point.lam == Rational(1));
  CHECK(apply(bad, wit->point) == wit->value);

  // e1 representer at scalar 1: a state on the order-unit side
  const Functional e1 = lev(BNElem{L12, QVec{Rational(1), Rational(0)}, Rational(1)});
  CHECK(functional_is_positive(e1));
  CHECK(functional_is_state(e1));
  CHECK(!functional_negativity_witness(e1).has_value());
  CHECK(apply(e1, ou_unit(SpaceRef(LINF2))) == Rational(1));

  // exact boundary: sup-norm equals the scalar
  const Functional edge = lev(BNElem{L12, QVec{Rational(1, 2), Rational(1, 2)}, Rational(1)});
  CHECK(functional_is_positive(edge));
  const Functional past = lev(BNElem{L12, QVec{Rational(1, 2), Rational(1, 2)}, Rational(1) - Rational(1, 1000)});
  CHECK(!functional_is_positive(past));
}

TEST_CASE("states round trip through their representers") {
  RatGen gen(803);
  for (int t = 0; t < 60; ++t) {
    QVec phi = gen.vec(2, 3, 4);
    Rational l1(0);
    for (const Rational& c : phi) l1 += rat_abs(c);
    if (l1 > 1) phi = vec_scale(Rational(1) / l1, phi);
    const BNElem rep{L12, phi, Rational(1)};
    const Functional f = lev(rep);
    REQUIRE(functional_is_state(f));
    const BNElem back = state_to_bn(f);
    CHECK(payload_eq(back.space, back.x, rep.x));
    CHECK(back.y == Rational(1));
  }
  // the unit-only state recovers the zero representer
  const BNElem zero_rep = state_to_bn(lev(BNElem{L12, vec_zero(2), Rational(1)}));
  CHECK(std::get<QVec>(zero_rep.x) == vec_zero(2));
  CHECK(zero_rep.y == Rational(1));

  CHECK_THROWS_AS(state_to_bn(lev(BNElem{L12, vec_zero(2), Rational(2)})), Error);
  CHECK_THROWS_AS(state_to_bn(lev(BNElem{L12, QVec{Rational(2), Rational(0)}, Rational(1)})),
                  Error);
}

TEST_CASE("ball extension solves the vertex system") {
  AffineOnBall a{LINF2, {}};
  a.vertex_values[QVec{Rational(1), Rational(1)}] = Rational(1);
  a.vertex_values[QVec{Rational(1), Rational(-1)}] = Rational(0);
  a.vertex_values[QVec{Rational(-1), Rational(-1)}] = Rational(-1);
  a.vertex_values[QVec{Rational(-1), Rational(1)}] = Rational(0);
  const QVec psi = ball_extension(a);
  CHECK(psi == QVec{Rational(1, 2), Rational(1, 2)});
  CHECK(ball_extension_formula(a, QVec{Rational(2), Rational(0)}) == Rational(1));

  // odd symmetry on vertices
  for (const QVec& v : square_ball().vertices)
    CHECK(affine_eval_on_ball(a, vec_neg(v)) == -affine_eval_on_ball(a, v));

  AffineOnBall zero{LINF2, {}};
  for (const QVec& v : square_ball().vertices) zero.vertex_values[v] = Rational(0);
  CHECK(ball_extension(zero) == vec_zero(2));

  AffineOnBall broken = a;
  broken.vertex_values[QVec{Rational(1), Rational(1)}] = Rational(2);
  CHECK_THROWS_AS(ball_extension(broken), Error);
}

TEST_CASE("extension is additive and homogeneous") {
  RatGen gen(804);
  const SpaceDesc hex = polytopal_space(absolutely_convex_hull(
      2, {QVec{Rational(1), Rational(0)}, QVec{Rational(0), Rational(1)},
          QVec{Rational(1), Rational(1)}}));
  for (const SpaceDesc& sp : {LINF2, hex}) {
    const Polytope ball = ball_polytope(sp);
    for (int t = 0; t < 40; ++t) {
      const QVec target = gen.vec(2, 3, 4);
      AffineOnBall a{sp, {}};
      for (const QVec& v : ball.vertices) a.vertex_values[v] = dot(target, v);
      CHECK(ball_extension(a) == target);
      const QVec x = gen.vec(2, 3, 4), y = gen.vec(2, 3, 4);
      const Rational c = gen.rational(3, 4);
      CHECK(ball_extension_formula(a, x) == dot(target, x));
      CHECK(ball_extension_formula(a, vec_add(x, y)) ==
            ball_extension_formula(a, x) + ball_extension_formula(a, y));
      CHECK(ball_extension_formula(a, vec_scale(c, x)) == c * ball_extension_formula(a, x));
    }
  }
}

TEST_CASE("effects extract from affine data on the base") {
  // a(x, 1) = (1 + x1) / 2 on the square base
  AffineOnBall a{LINF2, {}};
  for (const QVec& v : square_ball().vertices)
    a.vertex_values[v] = (Rational(1) + v[0]) / 2;
  const OUElem e = effect_to_ou(a, Rational(1, 2));
  CHECK(std::get<QVec>(e.x) == QVec{Rational(1, 2), Rational(0)});
  CHECK(e.lam == Rational(1, 2));
  CHECK(effect_member(e));

  // the constant-1 function is the unit
  AffineOnBall one{LINF2, {}};
  for (const QVec& v : square_ball().vertices) one.vertex_values[v] = Rational(1);
  const OUElem u = effect_to_ou(one, Rational(1));
  CHECK(std::get<QVec>(u.x) == vec_zero(2));
  CHECK(u.lam == Rational(1));

  // and the zero function is zero
  AffineOnBall zero{LINF2, {}};
  for (const QVec& v : square_ball().vertices) zero.vertex_values[v] = Rational(0);
  const OUElem z = effect_to_ou(zero, Rational(0));
  CHECK(std::get<QVec>(z.x) == vec_zero(2));
  CHECK(z.lam == Rational(0));
}

TEST_CASE("euclidean cone test in three dimensions") {
  const SpaceDesc b3 = l2_space(3);
  CHECK(bloch_psd_check(OUElem{b3, QVec{Rational(3, 5), Rational(4, 5), Rational(0)}, Rational(1)}));
  CHECK(!bloch_psd_check(OUElem{b3, QVec{Rational(1), Rational(0), Rational(0)}, Rational(1, 2)}));
  CHECK(bloch_psd_check(OUElem{b3, vec_zero(3), Rational(1)}));
  CHECK_THROWS_AS(bloch_psd_check(OUElem{l2_space(2), vec_zero(2), Rational(1)}), Error);

  RatGen gen(805);
  for (int t = 0; t < 100; ++t) {
    const OUElem e{b3, gen.vec(3, 2, 4), gen.rational(2, 4)};
    CHECK(bloch_psd_check(e) == ou_cone_member(e));
  }
}

TEST_CASE("sequence-side duality pairs l1 against the sup side") {
  SeqRep phi = seq_zero(SeqSpace::L1);
  phi.entries[1] = Rational(1, 2);
  phi.entries[3] = Rational(1, 2);
  const BNElem rep{SeqSpace::L1, phi, Rational(1)};
  const Functional f = lev(rep);
  CHECK(functional_is_state(f));
  const OUElem one{SeqSpace::Linf, seq_const(SeqSpace::Linf, Rational(1)), Rational(0)};
  CHECK(apply(f, one) == Rational(1));
  CHECK_THROWS_AS(functional_negativity_witness(f), Error);
}
