#include <catch2/catch_amalgamated.hpp>

#include "bnou/polytope.hpp"
#include "bnou/random.hpp"

using namespace bnou;

namespace {

QVec pt(long a, long b) { return QVec{Rational(a), Rational(b)}; }
QVec pt(const Rational& a, const Rational& b) { return QVec{a, b}; }

}  // namespace

TEST_CASE("convex hull drops interior points") {
  const Polytope h = convex_hull(2, {pt(0, 0), pt(1, 0), pt(0, 1), pt(Rational(1, 4), Rational(1, 4))});
  CHECK(h.vertices == std::vector<QVec>{pt(0, 0), pt(0, 1), pt(1, 0)});
}

TEST_CASE("convex hull of a single point is that point") {
  const Polytope h = convex_hull(2, {pt(2, 3)});
  CHECK(h.vertices == std::vector<QVec>{pt(2, 3)});
}

TEST_CASE("appending the centroid changes nothing") {
  const std::vector<QVec> tri{pt(1, 0), pt(0, 1), pt(-1, -1)};
  const Polytope with = convex_hull(2, {pt(1, 0), pt(0, 1), pt(-1, -1), pt(0, 0)});
  const Polytope without = convex_hull(2, tri);
  CHECK(polytope_eq(with, without));
}

TEST_CASE("hull inputs are validated") {
  CHECK_THROWS_AS(convex_hull(2, {}), Error);
  CHECK_THROWS_AS(convex_hull(2, {QVec{Rational(1)}}), Error);
}

TEST_CASE("absolutely convex hulls of the classic balls") {
  const Polytope cross = absolutely_convex_hull(2, {pt(1, 0), pt(0, 1)});
  CHECK(cross.vertices.size() == 4);
  CHECK(polytope_eq(cross, convex_hull(2, {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)})));

  const Polytope square = absolutely_convex_hull(2, {pt(1, 1), pt(1, -1)});
  CHECK(square.vertices.size() == 4);
  CHECK(polytope_eq(square, convex_hull(2, {pt(1, 1), pt(1, -1), pt(-1, 1), pt(-1, -1)})));

  const Polytope hex = absolutely_convex_hull(2, {pt(1, 0), pt(0, 1), pt(-1, -1)});
  CHECK(hex.vertices.size() == 6);

  // symmetry: vertex set closed under negation
  for (const Polytope* p : {&cross, &square, &hex})
    for (const QVec& v : p->vertices)
      CHECK(std::find(p->vertices.begin(), p->vertices.end(), vec_neg(v)) != p->vertices.end());
}

TEST_CASE("gauge closed forms on squares and cross-polytopes") {
  const Polytope square = absolutely_convex_hull(2, {pt(1, 1), pt(1, -1)});
  const Polytope cross = absolutely_convex_hull(2, {pt(1, 0), pt(0, 1)});
  CHECK(gauge(square, pt(Rational(1, 2), Rational(1, 4))) == Rational(1, 2));
  CHECK(gauge(cross, pt(Rational(1, 2), Rational(1, 4))) == Rational(3, 4));
  CHECK(gauge(square, pt(0, 0)) == Rational(0));

  // every vertex sits at gauge exactly 1
  for (const QVec& v : cross.vertices) CHECK(gauge(cross, v) == Rational(1));
  for (const QVec& v : square.vertices) CHECK(gauge(square, v) == Rational(1));
}

TEST_CASE("gauge rejects non-absorbing and asymmetric inputs") {
  Polytope segment;
  segment.dim = 2;
  segment.vertices = {pt(-1, 0), pt(1, 0)};
  CHECK_THROWS_AS(gauge(segment, pt(0, 1)), Error);

  Polytope lopsided;
  lopsided.dim = 2;
  lopsided.vertices = {pt(-1, -1), pt(-1, 1), pt(2, -1), pt(2, 1)};
  CHECK_THROWS_AS(gauge(lopsided, pt(1, 0)), Error);
}

TEST_CASE("membership at and below the gauge value") {
  const Polytope square = absolutely_convex_hull(2, {pt(1, 1), pt(1, -1)});
  CHECK(membership(square, pt(1, 1), Rational(1)));
  CHECK(!membership(square, pt(1, 1), Rational(1, 2)));
  CHECK_THROWS_AS(membership(square, pt(1, 1), Rational(-1)), Error);

  const Polytope hex = absolutely_convex_hull(2, {pt(1, 0), pt(0, 1), pt(-1, -1)});
  CHECK(membership(hex, pt(0, 0), Rational(1, 100)));
}

TEST_CASE("radial report flags") {
  const Polytope square = absolutely_convex_hull(2, {pt(1, 1), pt(1, -1)});
  const RadialReport r = radial_check(square);
  CHECK(r.bounded);
  CHECK(r.compact);
  CHECK(r.absorbing);

  const Polytope segment = absolutely_convex_hull(2, {pt(1, 0)});
  const RadialReport s = radial_check(segment);
  CHECK(s.bounded);
  CHECK(s.compact);
  CHECK(!s.absorbing);
}

TEST_CASE("gauge laws hold on random points of the hexagon") {
  const Polytope hex = absolutely_convex_hull(2, {pt(1, 0), pt(0, 1), pt(1, 1)});
  RatGen gen(77);
  for (int t = 0; t < 60; ++t) {
    const QVec x = gen.vec(2, 4, 5), y = gen.vec(2, 4, 5);
    const Rational gx = gauge(hex, x), gy = gauge(hex, y);
    // closed form for this ball
    CHECK(gx == rat_max(rat_max(rat_abs(x[0]), rat_abs(x[1])), rat_abs(x[0] - x[1])));
    CHECK(gauge(hex, vec_add(x, y)) <= gx + gy);
    const Rational c = gen.rational(3, 4);
    CHECK(gauge(hex, vec_scale(c, x)) == rat_abs(c) * gx);
    CHECK(membership(hex, x, gx));
  }
}
