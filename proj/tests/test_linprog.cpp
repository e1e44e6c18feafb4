#include <catch2/catch_amalgamated.hpp>

#include "bnou/linprog.hpp"
#include "bnou/random.hpp"

using namespace bnou;

namespace {

// Feasibility of a witness, checked independently of the solver.
bool satisfies(const LinearProgram& p, const QVec& w) {
  for (const Constraint& c : p.constraints) {
    const Rational lhs = dot(c.coeffs, w);
    if (c.rel == Rel::Le && !(lhs <= c.rhs)) return false;
    if (c.rel == Rel::Ge && !(lhs >= c.rhs)) return false;
    if (c.rel == Rel::Eq && lhs != c.rhs) return false;
  }
  for (std::size_t i = 0; i < p.bounds.size(); ++i) {
    if (p.bounds[i].lower && w[i] < *p.bounds[i].lower) return false;
    if (p.bounds[i].upper && w[i] > *p.bounds[i].upper) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gauge-shaped program: point inside a scaled square") {
  // min t  s.t.  (1/2,1/2) = w1(1,1) + w2(1,-1) - w3(1,1) - w4(1,-1),
  //              w >= 0, sum w <= t.   Optimal t = 1/2.
  LinearProgram p;
  p.objective = QVec{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
  p.bounds.assign(5, VarBound{Rational(0), std::nullopt});
  p.constraints.push_back(
      {QVec{Rational(1), Rational(1), Rational(-1), Rational(-1), Rational(0)}, Rel::Eq,
       Rational(1, 2)});
  p.constraints.push_back(
      {QVec{Rational(1), Rational(-1), Rational(-1), Rational(1), Rational(0)}, Rel::Eq,
       Rational(1, 2)});
  p.constraints.push_back(
      {QVec{Rational(1), Rational(1), Rational(1), Rational(1), Rational(-1)}, Rel::Le,
       Rational(0)});
  const LPOutcome out = lp_solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.optimum == Rational(1, 2));
  CHECK(satisfies(p, out.witness));
  CHECK(dot(p.objective, out.witness) == out.optimum);
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram p;
  p.objective = QVec{Rational(1)};
  p.constraints.push_back({QVec{Rational(1)}, Rel::Le, Rational(0)});
  p.constraints.push_back({QVec{Rational(1)}, Rel::Ge, Rational(1)});
  CHECK(lp_solve(p).status == LPStatus::Infeasible);
}

TEST_CASE("maximization without a ceiling is unbounded") {
  LinearProgram p;
  p.sense = Sense::Maximize;
  p.objective = QVec{Rational(1)};
  p.bounds.assign(1, VarBound{Rational(0), std::nullopt});
  CHECK(lp_solve(p).status == LPStatus::Unbounded);
}

TEST_CASE("malformed rows are rejected") {
  LinearProgram p;
  p.objective = QVec{Rational(1), Rational(1)};
  p.constraints.push_back({QVec{Rational(1)}, Rel::Le, Rational(0)});
  CHECK_THROWS_AS(lp_solve(p), Error);
}

TEST_CASE("free variables reach negative optima") {
  // min x  s.t. x >= -3 expressed through a constraint row, x otherwise free
  LinearProgram p;
  p.objective = QVec{Rational(1)};
  p.constraints.push_back({QVec{Rational(1)}, Rel::Ge, Rational(-3)});
  const LPOutcome out = lp_solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.optimum == Rational(-3));
}

TEST_CASE("simplex over the probability simplex picks the least coefficient") {
  RatGen gen(404);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 6));
    LinearProgram p;
    p.objective = gen.vec(n, 5, 6);
    p.bounds.assign(n, VarBound{Rational(0), std::nullopt});
    p.constraints.push_back({QVec(n, Rational(1)), Rel::Eq, Rational(1)});
    const LPOutcome out = lp_solve(p);
    REQUIRE(out.status == LPStatus::Optimal);
    Rational least = p.objective[0];
    for (const Rational& c : p.objective) least = rat_min(least, c);
    CHECK(out.optimum == least);
    CHECK(satisfies(p, out.witness));
    CHECK(dot(p.objective, out.witness) == out.optimum);

    // permuting rows must not move the value
    LinearProgram q = p;
    q.constraints.push_back({gen.vec(n, 2, 3), Rel::Le, Rational(100)});
    LinearProgram qr = q;
    std::swap(qr.constraints[0], qr.constraints[1]);
    const LPOutcome a = lp_solve(q), b = lp_solve(qr);
    REQUIRE(a.status == LPStatus::Optimal);
    REQUIRE(b.status == LPStatus::Optimal);
    CHECK(a.optimum == b.optimum);
  }
}

TEST_CASE("degenerate equality systems terminate") {
  // Bland's rule must survive duplicated rows.
  LinearProgram p;
  p.objective = QVec{Rational(1), Rational(1)};
  p.bounds.assign(2, VarBound{Rational(0), std::nullopt});
  p.constraints.push_back({QVec{Rational(1), Rational(1)}, Rel::Eq, Rational(1)});
  p.constraints.push_back({QVec{Rational(1), Rational(1)}, Rel::Eq, Rational(1)});
  p.constraints.push_back({QVec{Rational(2), Rational(2)}, Rel::Eq, Rational(2)});
  const LPOutcome out = lp_solve(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.optimum == Rational(1));
}
