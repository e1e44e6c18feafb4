#include <catch2/catch_amalgamated.hpp>

#include "bnou/bn_ou.hpp"
#include "bnou/random.hpp"

using namespace bnou;

namespace {

const SpaceDesc LINF2 = linf_space(2);
const SpaceDesc L12 = l1_space(2);

BNElem bn(const SpaceDesc& s, long a, long b, const Rational& y) {
  return BNElem{s, QVec{Rational(a), Rational(b)}, y};
}

}  // namespace

TEST_CASE("base-norm cone membership") {
  CHECK(bn_cone_member(bn(LINF2, 1, -1, Rational(1))));
  CHECK(!bn_cone_member(bn(LINF2, 2, 0, Rational(1))));
  CHECK(bn_cone_member(bn(LINF2, 0, 0, Rational(0))));
}

TEST_CASE("trace and base membership") {
  const BNElem half{LINF2, QVec{Rational(1, 2), Rational(0)}, Rational(1)};
  CHECK(bn_trace(half) == Rational(1));
  CHECK(bn_base_member(half));
  CHECK(!bn_base_member(BNElem{LINF2, QVec{Rational(1, 2), Rational(0)}, Rational(2)}));
  CHECK(bn_cone_member(BNElem{LINF2, QVec{Rational(1, 2), Rational(0)}, Rational(2)}));
  CHECK(bn_base_member(BNElem{l2_space(2), QVec{Rational(3, 5), Rational(4, 5)}, Rational(1)}));
}

TEST_CASE("base-norm value is the max formula") {
  const NormBound a = bn_norm(bn(LINF2, 1, 0, Rational(-2)), Rational(0));
  CHECK((a.exact() && a.lower == Rational(2)));
  const NormBound b = bn_norm(bn(LINF2, 1, 1, Rational(1)), Rational(0));
  CHECK((b.exact() && b.lower == Rational(1)));
}

TEST_CASE("base-norm unit ball is the cylinder over the payload ball") {
  RatGen gen(701);
  for (int t = 0; t < 60; ++t) {
    const QVec x = gen.vec(2, 3, 4);
    const Rational y = gen.rational(3, 4);
    const NormBound n = bn_norm(BNElem{LINF2, x, y}, Rational(0));
    REQUIRE(n.exact());
    const bool in_ball = n.lower <= 1;
    const bool in_cylinder =
        norm_cmp(LINF2, x, Rational(1)) != Cmp::Greater && rat_abs(y) <= 1;
    CHECK(in_ball == in_cylinder);
  }
}

TEST_CASE("positive decomposition from an upper bound") {
  const BNElem e = bn(LINF2, 1, -1, Rational(-1));
  const auto [plus, minus] = bn_positive_decompose(e, Rational(1));
  CHECK(std::get<QVec>(plus.x) == QVec{Rational(1), Rational(-1)});
  CHECK(plus.y == Rational(1));
  CHECK(std::get<QVec>(minus.x) == QVec{Rational(0), Rational(0)});
  CHECK(minus.y == Rational(2));
  CHECK(bn_cone_member(plus));
  CHECK(bn_cone_member(minus));

  const BNElem zero{LINF2, vec_zero(2), Rational(0)};
  const auto [zp, zm] = bn_positive_decompose(zero, Rational(0));
  CHECK((zp.y == 0 && zm.y == 0));

  CHECK_THROWS_AS(bn_positive_decompose(bn(LINF2, 2, 0, Rational(0)), Rational(1)), Error);
  // r must also dominate the scalar part for double positivity
  CHECK_THROWS_AS(bn_positive_decompose(bn(LINF2, 0, 0, Rational(2)), Rational(1)), Error);
}

TEST_CASE("order-unit cone and unit") {
  CHECK(ou_cone_member(OUElem{L12, QVec{Rational(1, 2), Rational(-1, 4)}, Rational(1)}));
  CHECK(!ou_cone_member(OUElem{L12, QVec{Rational(1), Rational(1)}, Rational(1)}));
  const OUElem u = ou_unit(SpaceRef(L12));
  CHECK(ou_cone_member(u));
  CHECK(u.lam == Rational(1));
  CHECK(std::get<QVec>(u.x) == vec_zero(2));
}

TEST_CASE("order-unit norm is the sum formula") {
  const NormBound n =
      ou_norm(OUElem{L12, QVec{Rational(1, 2), Rational(-1, 2)}, Rational(1, 3)}, Rational(0));
  CHECK((n.exact() && n.lower == Rational(4, 3)));
  const NormBound un = ou_norm(ou_unit(SpaceRef(L12)), Rational(0));
  CHECK((un.exact() && un.lower == Rational(1)));
}

TEST_CASE("order bounds certify domination by a multiple of the unit") {
  const OUElem e{L12, QVec{Rational(1), Rational(1)}, Rational(1, 2)};
  CHECK(ou_order_bound(e, Rational(2)) == 3);
  CHECK(ou_order_bound(ou_unit(SpaceRef(L12)), Rational(0)) == 1);
  CHECK_THROWS_AS(ou_order_bound(e, Rational(1)), Error);

  RatGen gen(702);
  for (int t = 0; t < 60; ++t) {
    const QVec x = gen.vec(2, 3, 4);
    const Rational slack = rat_abs(gen.rational(2, 3));
    Rational l1(0);
    for (const Rational& c : x) l1 += rat_abs(c);
    const OUElem o{L12, x, gen.rational(3, 4)};
    const Int n = ou_order_bound(o, l1 + slack);
    const OUElem dom{L12, vec_zero(2), Rational(n)};
    CHECK(ou_le(o, dom));
  }
}

TEST_CASE("effect interval") {
  CHECK(effect_member(OUElem{L12, vec_zero(2), Rational(1, 2)}));
  CHECK(!effect_member(OUElem{L12, QVec{Rational(1, 2), Rational(0)}, Rational(1, 4)}));
  CHECK(effect_member(OUElem{L12, QVec{Rational(1, 4), Rational(0)}, Rational(1, 2)}));

  RatGen gen(703);
  const OUElem u = ou_unit(SpaceRef(L12));
  for (int t = 0; t < 60; ++t) {
    const OUElem e{L12, gen.vec(2, 2, 4), gen.rational(2, 4)};
    // interval symmetry and the two-sided cone characterization
    CHECK(effect_member(e) == effect_member(ou_sub(u, e)));
    const OUElem zero{L12, vec_zero(2), Rational(0)};
    CHECK(effect_member(e) == (ou_le(zero, e) && ou_le(e, u)));
  }
}

TEST_CASE("cone algebra on random samples") {
  RatGen gen(704);
  for (int t = 0; t < 60; ++t) {
    const QVec x1 = gen.vec(2, 3, 4), x2 = gen.vec(2, 3, 4);
    Rational n1(0), n2(0);
    for (const Rational& c : x1) n1 += rat_abs(c);
    for (const Rational& c : x2) n2 += rat_abs(c);
    const OUElem a{L12, x1, n1 + rat_abs(gen.rational(2, 4))};
    const OUElem b{L12, x2, n2 + rat_abs(gen.rational(2, 4))};
    CHECK(ou_cone_member(a));
    CHECK(ou_cone_member(ou_add(a, b)));
    const Rational c = rat_abs(gen.rational(3, 4));
    CHECK(ou_cone_member(OUElem{L12, vec_scale(c, x1), c * a.lam}));
    // pointedness: only the origin is in both the cone and its negation
    if (!vec_is_zero(x1) || a.lam != 0) {
      const OUElem neg{L12, vec_neg(x1), -a.lam};
      CHECK(!(ou_cone_member(a) && ou_cone_member(neg)));
    }
  }
}

TEST_CASE("bounded-depth archimedean instances") {
  RatGen gen(705);
  for (int t = 0; t < 20; ++t) {
    // e <= 0 implies e <= (1/n) u for every n up to the probe depth
    const QVec x = gen.vec(2, 2, 4);
    Rational l1(0);
    for (const Rational& c : x) l1 += rat_abs(c);
    const OUElem e{L12, vec_neg(x), -(l1 + rat_abs(gen.rational(2, 4)))};
    const OUElem zero{L12, vec_zero(2), Rational(0)};
    REQUIRE(ou_le(e, zero));
    for (long n = 1; n <= 64; n *= 2) {
      const OUElem bound{L12, vec_zero(2), Rational(1, n)};
      CHECK(ou_le(e, bound));
    }
  }
}

TEST_CASE("sequence payloads flow through the constructions") {
  SeqRep g = seq_zero(SeqSpace::L1);
  g.geo = GeoTail{Rational(1, 2), Rational(1, 2), 1};
  const OUElem e{SeqSpace::L1, g, Rational(2)};
  CHECK(ou_cone_member(e));
  const NormBound n = ou_norm(e, Rational(0));
  CHECK((n.exact() && n.lower == Rational(3)));

  const BNElem b{SeqSpace::C0, seq_zero(SeqSpace::C0), Rational(1)};
  CHECK(bn_base_member(b));
}
