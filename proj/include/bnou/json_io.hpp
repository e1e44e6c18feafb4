#pragma once

// JSON wire formats. Rationals travel as strings "p/q" (or "p" when the
// denominator is 1), sequence reps carry their explicit entries as a
// string-keyed object, and reports keep insertion order so repeated runs
// with the same flags are byte-identical.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "bnou/bn_ou.hpp"
#include "bnou/duality.hpp"
#include "bnou/polytope.hpp"
#include "bnou/rational.hpp"
#include "bnou/scott.hpp"
#include "bnou/sequences.hpp"
#include "bnou/spaces.hpp"

namespace bnou {

using json = nlohmann::ordered_json;

inline json rat_to_json(const Rational& q) { return rat_str(q); }

inline Rational rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
  fail(ErrorCode::ParseError, "expected a rational as \"p/q\" string");
}

inline json vec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(rat_to_json(c));
  return a;
}

inline QVec vec_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of rationals");
  QVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

inline json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(vec_to_json(v));
  return json{{"dim", p.dim}, {"vertices", std::move(verts)}};
}

inline Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    fail(ErrorCode::ParseError, "polytope needs {\"dim\", \"vertices\"}");
  if (!j["dim"].is_number_integer()) fail(ErrorCode::ParseError, "polytope dim must be an integer");
  Polytope p;
  p.dim = j["dim"].get<int>();
  if (!j["vertices"].is_array()) fail(ErrorCode::ParseError, "polytope vertices must be an array");
  for (const auto& v : j["vertices"]) p.vertices.push_back(vec_from_json(v));
  return p;
}

inline json space_to_json(const SpaceDesc& s) {
  json j;
  j["dim"] = s.dim;
  switch (s.kind) {
    case NormKind::L1: j["norm"] = "l1"; break;
    case NormKind::L2: j["norm"] = "l2"; break;
    case NormKind::Linf: j["norm"] = "linf"; break;
    case NormKind::Polytopal: j["norm"] = json{{"polytopal", polytope_to_json(s.ball)}}; break;
  }
  if (s.dual_side) j["dual"] = true;
  return j;
}

inline SpaceDesc space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("norm"))
    fail(ErrorCode::ParseError, "space needs {\"dim\", \"norm\"}");
  const int dim = j["dim"].get<int>();
  SpaceDesc s;
  const json& n = j["norm"];
  if (n.is_string()) {
    const std::string k = n.get<std::string>();
    if (k == "l1")
      s = l1_space(dim);
    else if (k == "l2")
      s = l2_space(dim);
    else if (k == "linf")
      s = linf_space(dim);
    else
      fail(ErrorCode::ParseError, "unknown norm kind \"" + k + "\"");
  } else if (n.is_object() && n.contains("polytopal")) {
    s = polytopal_space(polytope_from_json(n["polytopal"]));
    if (s.dim != dim) fail(ErrorCode::ParseError, "space dim disagrees with its ball");
  } else {
    fail(ErrorCode::ParseError, "norm must be \"l1\"|\"l2\"|\"linf\"|{\"polytopal\": ...}");
  }
  if (j.contains("dual") && j["dual"].get<bool>()) s = dual_space(s);
  return s;
}

inline json seq_space_to_json(SeqSpace s) { return seq_space_name(s); }

inline SeqSpace seq_space_from_json(const json& j) {
  if (!j.is_string()) fail(ErrorCode::ParseError, "sequence space must be a string");
  const std::string k = j.get<std::string>();
  if (k == "c0") return SeqSpace::C0;
  if (k == "c") return SeqSpace::C;
  if (k == "l1") return SeqSpace::L1;
  if (k == "linf") return SeqSpace::Linf;
  fail(ErrorCode::ParseError, "unknown sequence space \"" + k + "\"");
}

inline json seqrep_to_json(const SeqRep& a) {
  json ex = json::object();
  for (const auto& [i, v] : a.entries) ex[std::to_string(i)] = rat_to_json(v);
  json j;
  j["space"] = seq_space_to_json(a.space);
  j["explicit"] = std::move(ex);
  j["tail"] = rat_to_json(a.tail);
  if (a.geo)
    j["geo"] = json{{"coeff", rat_to_json(a.geo->coeff)},
                    {"ratio", rat_to_json(a.geo->ratio)},
                    {"start", a.geo->start}};
  else
    j["geo"] = nullptr;
  return j;
}

inline SeqRep seqrep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("explicit") || !j.contains("tail"))
    fail(ErrorCode::ParseError, "sequence rep needs {\"space\", \"explicit\", \"tail\", \"geo\"}");
  SeqRep a = seq_zero(seq_space_from_json(j["space"]));
  if (!j["explicit"].is_object())
    fail(ErrorCode::ParseError, "\"explicit\" must be an object of index -> rational");
  for (const auto& [key, val] : j["explicit"].items()) {
    std::size_t used = 0;
    long idx = 0;
    try {
      idx = std::stol(key, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad sequence index \"" + key + "\"");
    }
    if (used != key.size()) fail(ErrorCode::ParseError, "bad sequence index \"" + key + "\"");
    a.entries[idx] = rat_from_json(val);
  }
  a.tail = rat_from_json(j["tail"]);
  if (j.contains("geo") && !j["geo"].is_null()) {
    const json& g = j["geo"];
    if (!g.is_object() || !g.contains("coeff") || !g.contains("ratio") || !g.contains("start"))
      fail(ErrorCode::ParseError, "geo needs {\"coeff\", \"ratio\", \"start\"}");
    a.geo = GeoTail{rat_from_json(g["coeff"]), rat_from_json(g["ratio"]), g["start"].get<long>()};
  }
  seq_validate(a, "seqrep_from_json");
  return a;
}

inline json spaceref_to_json(const SpaceRef& s) {
  if (std::holds_alternative<SpaceDesc>(s)) return space_to_json(std::get<SpaceDesc>(s));
  return seq_space_to_json(std::get<SeqSpace>(s));
}

inline SpaceRef spaceref_from_json(const json& j) {
  if (j.is_string()) return seq_space_from_json(j);
  return space_from_json(j);
}

inline json payload_to_json(const Payload& p) {
  if (std::holds_alternative<QVec>(p)) return vec_to_json(std::get<QVec>(p));
  return seqrep_to_json(std::get<SeqRep>(p));
}

inline Payload payload_from_json(const json& j) {
  if (j.is_array()) return vec_from_json(j);
  return seqrep_from_json(j);
}

namespace io_detail {

inline json elem_to_json(const SpaceRef& space, const Payload& x, const Rational& scalar) {
  json j;
  j["space"] = spaceref_to_json(space);
  j["x"] = payload_to_json(x);
  j["scalar"] = rat_to_json(scalar);
  return j;
}

inline void elem_from_json(const json& j, SpaceRef& space, Payload& x, Rational& scalar,
                           const char* what) {
  if (!j.is_object() || !j.contains("space") || !j.contains("x") || !j.contains("scalar"))
    fail(ErrorCode::ParseError, std::string(what) + " needs {\"space\", \"x\", \"scalar\"}");
  space = spaceref_from_json(j["space"]);
  x = payload_from_json(j["x"]);
  scalar = rat_from_json(j["scalar"]);
}

}  // namespace io_detail

inline json bn_to_json(const BNElem& e) { return io_detail::elem_to_json(e.space, e.x, e.y); }

inline BNElem bn_from_json(const json& j) {
  BNElem e;
  io_detail::elem_from_json(j, e.space, e.x, e.y, "base-norm element");
  payload_validate(e.space, e.x, "bn_from_json");
  return e;
}

inline json ou_to_json(const OUElem& e) { return io_detail::elem_to_json(e.space, e.x, e.lam); }

inline OUElem ou_from_json(const json& j) {
  OUElem e;
  io_detail::elem_from_json(j, e.space, e.x, e.lam, "order-unit element");
  payload_validate(e.space, e.x, "ou_from_json");
  return e;
}

inline json functional_to_json(const Functional& f) {
  json j = io_detail::elem_to_json(f.space, f.rep, f.scalar);
  j["kind"] = f.kind == FunctionalKind::Lev ? "lev" : "ev";
  return j;
}

inline Functional functional_from_json(const json& j) {
  Functional f;
  io_detail::elem_from_json(j, f.space, f.rep, f.scalar, "functional");
  payload_validate(f.space, f.rep, "functional_from_json");
  if (!j.contains("kind")) fail(ErrorCode::ParseError, "functional needs \"kind\"");
  const std::string k = j["kind"].get<std::string>();
  if (k == "lev")
    f.kind = FunctionalKind::Lev;
  else if (k == "ev")
    f.kind = FunctionalKind::Ev;
  else
    fail(ErrorCode::ParseError, "functional kind must be \"lev\" or \"ev\"");
  return f;
}

/// The convergence-report wire format: residual rows as string pairs, one a
/// priori bound, and the first sampled index beating eps (0 when none did).
inline json residual_report_to_json(const std::vector<std::pair<long, Rational>>& residuals,
                                    const Rational& bound, long n_for_eps) {
  json rows = json::array();
  for (const auto& [n, r] : residuals)
    rows.push_back(json::array({std::to_string(n), rat_str(r)}));
  json j;
  j["residuals"] = std::move(rows);
  j["bound"] = rat_str(bound);
  j["N_for_eps"] = n_for_eps;
  return j;
}

inline json report_to_json(const ConvergenceReport& r) {
  return residual_report_to_json(r.residuals, r.bound, r.n_for_eps);
}

}  // namespace bnou
