#pragma once

// Directed suprema and the truncation-chain machinery. A finite directed
// family in a partial order has a greatest member, so finite suprema reduce
// to a scan. The interesting chains are infinite: truncations of a summable
// sequence inside the order-unit construction, whose scalar parts
// mu_n = mu - tail_n rise to mu in lockstep with the payload truncations.
// Everything here produces exact rational residuals, so convergence is
// certified by explicit bounds rather than floating-point smallness.

#include <utility>
#include <vector>

#include "bnou/duality.hpp"

namespace bnou {

struct FiniteFamily {
  std::vector<OUElem> elements;
};

/// Pairwise check: every two members have an upper bound inside the family.
inline bool is_directed(const FiniteFamily& fam) {
  if (fam.elements.empty()) fail(ErrorCode::EmptyFamily, "is_directed: empty family");
  const auto& es = fam.elements;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      bool bounded = false;
      for (std::size_t k = 0; k < es.size() && !bounded; ++k)
        bounded = ou_le(es[i], es[k]) && ou_le(es[j], es[k]);
      if (!bounded) return false;
    }
  return true;
}

/// The supremum of a finite directed family is its greatest member.
inline OUElem finite_directed_sup(const FiniteFamily& fam) {
  if (fam.elements.empty()) fail(ErrorCode::EmptyFamily, "finite_directed_sup: empty family");
  for (const OUElem& c : fam.elements) {
    bool greatest = true;
    for (const OUElem& e : fam.elements)
      if (!ou_le(e, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  fail(ErrorCode::NotDirected, "finite_directed_sup: family has no greatest member");
}

// The chain of truncations of a fixed target (x, mu) with x summable:
// element n = (x restricted to indices <= n, mu - ||tail of x past n||_1).
struct TruncationChain {
  OUElem target;
};

namespace chain_detail {

inline const SeqRep& target_seq(const OUElem& t, const char* where) {
  if (!std::holds_alternative<SeqRep>(t.x))
    fail(ErrorCode::WrongSpace, std::string(where) + ": target must be a summable sequence");
  const SeqRep& r = std::get<SeqRep>(t.x);
  if (r.space != SeqSpace::L1)
    fail(ErrorCode::WrongSpace, std::string(where) + ": target must be a summable sequence");
  return r;
}

}  // namespace chain_detail

inline TruncationChain make_chain(const OUElem& target) {
  const SeqRep& r = chain_detail::target_seq(target, "make_chain");
  payload_validate(target.space, target.x, "make_chain");
  if (!std::holds_alternative<SeqSpace>(target.space) ||
      std::get<SeqSpace>(target.space) != r.space)
    fail(ErrorCode::SpaceMismatch, "make_chain: target space tag must be the summable sequences");
  return TruncationChain{target};
}

inline OUElem chain_element(const TruncationChain& c, long n) {
  if (n < 1) fail(ErrorCode::NegativeInput, "chain_element: index starts at 1");
  const SeqRep& x = chain_detail::target_seq(c.target, "chain_element");
  return OUElem{c.target.space, seq_truncate(x, n), c.target.lam - seq_tail_l1(x, n)};
}

inline const OUElem& chain_sup(const TruncationChain& c) { return c.target; }

/// Exact distance from the n-th element to the supremum. Both the payload
/// gap and the scalar gap equal the tail sum, so the l1-sum norm gives
/// exactly twice the tail.
inline Rational chain_distance(const TruncationChain& c, long n) {
  OUElem diff = ou_sub(chain_sup(c), chain_element(c, n));
  NormBound nb = ou_norm(diff, Rational(0));
  if (!nb.exact()) throw std::logic_error("chain_distance: l1 norm must be exact");
  return nb.lower;
}

/// Smallest n >= 1 with ||sup - element(n)|| < eps. Terminates for every
/// eps > 0 because tails of a summable representation vanish.
inline long verify_norm_convergence(const TruncationChain& c, const Rational& eps) {
  if (eps <= 0) fail(ErrorCode::NegativeInput, "verify_norm_convergence: eps must be positive");
  const SeqRep& x = chain_detail::target_seq(c.target, "verify_norm_convergence");
  for (long n = 1;; ++n) {
    if (Rational(2) * seq_tail_l1(x, n) < eps) return n;
    if (n > 4000000) throw std::logic_error("verify_norm_convergence: tail refuses to vanish");
  }
}

// Residual trace of a functional along a chain. residual(n) is the exact
// gap value_at_sup - value(element n); `bound` dominates every entry and
// shrinks with the tail, which is the certificate of convergence.
struct ConvergenceReport {
  std::vector<std::pair<long, Rational>> residuals;
  Rational value_at_sup;
  Rational bound;        // functional norm * distance at n = 0 (a priori cap)
  long n_for_eps = 0;    // first sampled n with |residual| < eps, 0 if none
  bool nonnegative = false;
  bool monotone = false;  // nonincreasing in n
  bool bounded = false;   // |residual(n)| <= functional norm * 2 * tail(n), all n
};

namespace chain_detail {

inline Rational functional_bn_norm(const Functional& f) {
  NormBound nb = payload_norm_value(f.space, f.rep, Rational(0), "scott_continuity_check");
  if (!nb.exact()) throw std::logic_error("functional norm must be exact on sequence spaces");
  return rat_max(nb.lower, rat_abs(f.scalar));
}

inline ConvergenceReport trace_residuals(const Functional& f, const TruncationChain& c,
                                         long depth, const Rational& eps) {
  if (depth < 1) fail(ErrorCode::NegativeInput, "residual trace: depth starts at 1");
  const SeqRep& x = target_seq(c.target, "residual trace");
  const Rational fnorm = functional_bn_norm(f);
  ConvergenceReport rep;
  rep.value_at_sup = apply(f, chain_sup(c));
  rep.bound = fnorm * Rational(2) * seq_tail_l1(x, 0);
  rep.nonnegative = rep.monotone = rep.bounded = true;
  rep.residuals.reserve(static_cast<std::size_t>(depth));
  for (long n = 1; n <= depth; ++n) {
    Rational res = rep.value_at_sup - apply(f, chain_element(c, n));
    if (res < 0) rep.nonnegative = false;
    if (!rep.residuals.empty() && res > rep.residuals.back().second) rep.monotone = false;
    if (rat_abs(res) > fnorm * Rational(2) * seq_tail_l1(x, n)) rep.bounded = false;
    if (rep.n_for_eps == 0 && rat_abs(res) < eps) rep.n_for_eps = n;
    rep.residuals.emplace_back(n, std::move(res));
  }
  return rep;
}

}  // namespace chain_detail

/// Residual trace of a positive functional along the chain. Positivity and
/// chain monotonicity force the residuals nonnegative and nonincreasing;
/// the report records those facts plus the explicit tail bound, which is
/// what Scott continuity of the induced map comes down to here.
inline ConvergenceReport scott_continuity_check(const Functional& f, const TruncationChain& c,
                                                long depth, const Rational& eps = Rational(1, 100)) {
  if (!functional_is_positive(f))
    fail(ErrorCode::NotPositive, "scott_continuity_check: functional must be positive");
  return chain_detail::trace_residuals(f, c, depth, eps);
}

// Normality certificate for an evaluation functional that need not be
// positive: split its representer into a difference of two cone members,
// certify each half monotonically, and recombine.
struct NormalityReport {
  ConvergenceReport combined;
  ConvergenceReport positive_part;
  ConvergenceReport negative_part;
  bool decomposition_consistent = false;  // combined == positive - negative at each n
};

inline NormalityReport ev_is_normal_check(const BNElem& e, const TruncationChain& c, long depth,
                                          const Rational& eps = Rational(1, 100)) {
  NormBound nb = bn_norm(e, Rational(0));
  if (!nb.exact()) throw std::logic_error("ev_is_normal_check: representer norm must be exact");
  auto [plus, minus] = bn_positive_decompose(e, nb.lower);

  NormalityReport rep;
  rep.combined = chain_detail::trace_residuals(ev(e), c, depth, eps);
  rep.positive_part = scott_continuity_check(ev(plus), c, depth, eps);
  rep.negative_part = scott_continuity_check(ev(minus), c, depth, eps);
  rep.decomposition_consistent = true;
  for (long i = 0; i < depth; ++i)
    if (rep.combined.residuals[static_cast<std::size_t>(i)].second !=
        rep.positive_part.residuals[static_cast<std::size_t>(i)].second -
            rep.negative_part.residuals[static_cast<std::size_t>(i)].second)
      rep.decomposition_consistent = false;
  return rep;
}

}  // namespace bnou
