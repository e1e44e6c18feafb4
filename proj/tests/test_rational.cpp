#include <catch2/catch_amalgamated.hpp>

#include "bnou/rational.hpp"
#include "bnou/vec.hpp"

using namespace bnou;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_parse("3/4") == Rational(3, 4));
  CHECK(rat_parse("-3/4") == Rational(-3, 4));
  CHECK(rat_parse("7") == Rational(7));
  CHECK(rat_parse("6/8") == Rational(3, 4));
  CHECK(rat_parse("-6/-8") == Rational(3, 4));
  CHECK(rat_str(Rational(3, 4)) == "3/4");
  CHECK(rat_str(Rational(-3, 4)) == "-3/4");
  CHECK(rat_str(Rational(7)) == "7");
  CHECK(rat_str(Rational(0)) == "0");

  CHECK_THROWS_AS(rat_parse("abc"), Error);
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(make_rational(Int(6), Int(8)) == Rational(3, 4));
  CHECK(make_rational(Int(1), Int(-2)) == Rational(-1, 2));
  CHECK(make_rational(Int(-1), Int(-2)) == Rational(1, 2));
  CHECK_THROWS_AS(make_rational(Int(1), Int(0)), Error);
}

TEST_CASE("ceil and floor") {
  CHECK(rat_ceil(Rational(7, 3)) == 3);
  CHECK(rat_ceil(Rational(-1, 2)) == 0);
  CHECK(rat_ceil(Rational(2)) == 2);
  CHECK(rat_floor(Rational(7, 3)) == 2);
  CHECK(rat_floor(Rational(-1, 2)) == -1);
  CHECK(rat_floor(Rational(2)) == 2);

  // bracketing law on a sweep of small rationals
  for (long num = -20; num <= 20; ++num)
    for (long den = 1; den <= 6; ++den) {
      const Rational q = make_rational(Int(num), Int(den));
      const Int c = rat_ceil(q);
      CHECK(Rational(c - 1) < q);
      CHECK(q <= Rational(c));
      CHECK(rat_floor(q) == -rat_ceil(-q));
    }
}

TEST_CASE("integer powers") {
  CHECK(rat_pow(Rational(2, 3), 2) == Rational(4, 9));
  CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rat_pow(Rational(2, 3), 0) == Rational(1));
  CHECK(rat_pow(Rational(-1, 2), 3) == Rational(-1, 8));
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), Error);
}

TEST_CASE("min max abs") {
  CHECK(rat_min(Rational(1, 2), Rational(1, 3)) == Rational(1, 3));
  CHECK(rat_max(Rational(1, 2), Rational(1, 3)) == Rational(1, 2));
  CHECK(rat_abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(rat_abs(Rational(0)) == Rational(0));
}

TEST_CASE("vector arithmetic") {
  const QVec a{Rational(1), Rational(2)};
  const QVec b{Rational(3), Rational(4)};
  CHECK(dot(a, b) == Rational(11));
  CHECK(vec_add(a, b) == QVec{Rational(4), Rational(6)});
  CHECK(vec_sub(a, b) == QVec{Rational(-2), Rational(-2)});
  CHECK(vec_scale(Rational(1, 2), a) == QVec{Rational(1, 2), Rational(1)});
  CHECK(vec_neg(a) == QVec{Rational(-1), Rational(-2)});
  CHECK(vec_zero(3) == QVec{Rational(0), Rational(0), Rational(0)});
  CHECK_THROWS_AS(dot(a, QVec{Rational(1)}), Error);
}
