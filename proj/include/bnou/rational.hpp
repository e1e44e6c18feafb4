#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bnou/error.hpp"

namespace bnou {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values normalized (gcd-reduced,
// positive denominator), so equality is structural equality.
using Rational = boost::multiprecision::cpp_rational;

// Safe construction from a possibly negative denominator.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline const Rational& rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Least integer >= q, computed from truncating integer division.
inline Int rat_ceil(const Rational& q) {
  Int t = rat_num(q) / rat_den(q);  // truncates toward zero
  if (rat_num(q) > 0 && t * rat_den(q) != rat_num(q)) ++t;
  return t;
}

/// Greatest integer <= q.
inline Int rat_floor(const Rational& q) {
  Int t = rat_num(q) / rat_den(q);
  if (rat_num(q) < 0 && t * rat_den(q) != rat_num(q)) --t;
  return t;
}

/// q^k for integer k >= 0 (k < 0 requires q != 0).
inline Rational rat_pow(const Rational& q, long k) {
  if (k < 0) {
    if (q == 0) fail(ErrorCode::NegativeInput, "0 cannot be raised to a negative power");
    return Rational(1) / rat_pow(q, -k);
  }
  Rational acc(1), base(q);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rational& q) { return q.str(); }

/// Parses "p/q" or "p" (optional leading '-'). Rejects everything else.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  std::size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
      return Rational(Int(s));
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    return make_rational(Int(ns), Int(ds));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
}

}  // namespace bnou
