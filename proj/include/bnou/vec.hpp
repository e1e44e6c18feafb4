#pragma once

#include <vector>

#include "bnou/rational.hpp"

namespace bnou {

using QVec = std::vector<Rational>;

inline void require_same_dim(const QVec& a, const QVec& b, const char* where) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, where);
}

inline QVec vec_add(const QVec& a, const QVec& b) {
  require_same_dim(a, b, "vec_add");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec vec_sub(const QVec& a, const QVec& b) {
  require_same_dim(a, b, "vec_sub");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec vec_neg(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline QVec vec_scale(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rational dot(const QVec& a, const QVec& b) {
  require_same_dim(a, b, "dot");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool vec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec vec_zero(std::size_t n) { return QVec(n, Rational(0)); }

inline QVec vec_unit(std::size_t n, std::size_t i) {
  QVec r(n, Rational(0));
  r[i] = 1;
  return r;
}

}  // namespace bnou
