#pragma once

// Exact-rational geometry for the four illustrative figures: the euclidean
// base-norm cylinder-and-cone picture, the l1(3) octahedron with its
// simplex base, the dual double-cone with its effect circle, and the cube
// with the non-planar hexagonal zig-zag. Circles are sampled on the
// rational parametrization t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), so every
// emitted point is exactly rational; the SVG rendering rounds only at the
// last step and deterministically.

#include <string>
#include <utility>
#include <vector>

#include "bnou/json_io.hpp"

namespace bnou {

enum class CoordConvention { TraceVertical, Axes };

inline const char* convention_name(CoordConvention c) {
  return c == CoordConvention::TraceVertical ? "trace-vertical" : "axes";
}

struct Polyline {
  std::string name;
  bool closed = false;
  std::string style;  // "solid" | "light" | "dotted"
  std::vector<QVec> points;
};

struct VertexSet {
  std::string name;
  std::vector<QVec> points;
};

struct FigureGeometry {
  int figure = 0;
  CoordConvention convention = CoordConvention::TraceVertical;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<VertexSet> vertex_sets;
  std::vector<Polyline> polylines;
};

/// Point of the unit circle at parameter t: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
inline QVec circle_point(const Rational& t) {
  const Rational d = Rational(1) + t * t;
  return {(Rational(1) - t * t) / d, Rational(2) * t / d};
}

/// Closed 4m-gon inscribed in the unit circle: the right half comes from
/// t = k/m, k = -m..m, the left half is its mirror. Counterclockwise from
/// (0,-1).
inline std::vector<QVec> unit_circle_samples(int m) {
  if (m < 1) fail(ErrorCode::EmptyInput, "unit_circle_samples: m must be positive");
  std::vector<QVec> pts;
  pts.reserve(4u * static_cast<unsigned>(m));
  for (int k = -m; k <= m; ++k) pts.push_back(circle_point(Rational(k, m)));
  for (int k = m - 1; k > -m; --k) {
    QVec p = circle_point(Rational(k, m));
    p[0] = -p[0];
    pts.push_back(std::move(p));
  }
  return pts;
}

namespace fig_detail {

inline QVec at_height(const QVec& c, const Rational& h) { return {c[0], c[1], h}; }

inline std::vector<QVec> ring(const std::vector<QVec>& circle, const Rational& radius,
                              const Rational& height) {
  std::vector<QVec> out;
  out.reserve(circle.size());
  for (const QVec& c : circle) out.push_back({radius * c[0], radius * c[1], height});
  return out;
}

// The four cardinal circle points, in emission order.
inline std::vector<QVec> cardinals() {
  return {{Rational(1), Rational(0)},
          {Rational(0), Rational(1)},
          {Rational(-1), Rational(0)},
          {Rational(0), Rational(-1)}};
}

inline FigureGeometry figure1() {
  FigureGeometry g;
  g.figure = 1;
  g.metadata.emplace_back("subject", "base-norm construction over the euclidean plane");
  const std::vector<QVec> circle = unit_circle_samples(4);

  g.vertex_sets.push_back({"origin", {{Rational(0), Rational(0), Rational(0)}}});
  g.polylines.push_back({"base_circle", true, "solid", ring(circle, Rational(1), Rational(1))});
  int k = 0;
  for (const QVec& c : cardinals())
    g.polylines.push_back({"cone_generator_" + std::to_string(++k), false, "light",
                           {{Rational(0), Rational(0), Rational(0)}, at_height(c, Rational(1))}});
  g.polylines.push_back({"ball_bottom", true, "solid", ring(circle, Rational(1), Rational(-1))});
  k = 0;
  for (const QVec& c : cardinals())
    g.polylines.push_back({"ball_side_" + std::to_string(++k), false, "light",
                           {at_height(c, Rational(-1)), at_height(c, Rational(1))}});
  return g;
}

inline FigureGeometry figure2() {
  FigureGeometry g;
  g.figure = 2;
  g.metadata.emplace_back("subject", "the three-dimensional summable-sequence space");
  const QVec e1{Rational(1), Rational(0), Rational(0)};
  const QVec e2{Rational(0), Rational(1), Rational(0)};
  const QVec e3{Rational(0), Rational(0), Rational(1)};
  const std::vector<QVec> pos{e1, e2, e3};
  std::vector<QVec> ball = pos;
  for (const QVec& e : pos) ball.push_back(vec_neg(e));

  g.vertex_sets.push_back({"base_vertices", pos});
  g.vertex_sets.push_back({"ball_vertices", ball});
  g.polylines.push_back({"base_triangle", true, "solid", pos});
  int k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj) {
          QVec a = si == 0 ? pos[i] : vec_neg(pos[i]);
          QVec b = sj == 0 ? pos[j] : vec_neg(pos[j]);
          g.polylines.push_back(
              {"ball_edge_" + std::to_string(++k), false, "light", {std::move(a), std::move(b)}});
        }
  return g;
}

inline FigureGeometry figure3() {
  FigureGeometry g;
  g.figure = 3;
  g.metadata.emplace_back("subject", "order-unit dual of the euclidean base-norm space");
  g.metadata.emplace_back("circle_height", "1/2");
  g.metadata.emplace_back("circle_radius", "1/2");
  g.metadata.emplace_back("circle_derivation",
                          "derived analytically from the boundary crossing ||x|| = h = 1 - h");
  const std::vector<QVec> circle = unit_circle_samples(4);
  const QVec origin{Rational(0), Rational(0), Rational(0)};
  const QVec unit{Rational(0), Rational(0), Rational(1)};

  g.vertex_sets.push_back({"origin", {origin}});
  g.vertex_sets.push_back({"unit", {unit}});
  g.polylines.push_back({"cone_rim", true, "solid", ring(circle, Rational(1), Rational(1))});
  int k = 0;
  for (const QVec& c : cardinals())
    g.polylines.push_back({"cone_generator_" + std::to_string(++k), false, "light",
                           {origin, at_height(c, Rational(1))}});
  g.polylines.push_back({"down_cone_rim", true, "solid", ring(circle, Rational(1), Rational(0))});
  k = 0;
  for (const QVec& c : cardinals())
    g.polylines.push_back({"down_cone_generator_" + std::to_string(++k), false, "light",
                           {unit, at_height(c, Rational(0))}});
  g.polylines.push_back(
      {"effect_circle", true, "dotted", ring(circle, Rational(1, 2), Rational(1, 2))});
  return g;
}

inline FigureGeometry figure4() {
  FigureGeometry g;
  g.figure = 4;
  g.metadata.emplace_back("subject", "unit-interval cube with the non-planar hexagon");
  std::vector<QVec> cube;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) cube.push_back({Rational(a), Rational(b), Rational(c)});
  g.vertex_sets.push_back({"cube_vertices", cube});

  int k = 0;
  for (const QVec& v : cube)
    for (std::size_t i = 0; i < 3; ++i)
      if (v[i] == 0) {
        QVec w = v;
        w[i] = Rational(1);
        g.polylines.push_back(
            {"cube_edge_" + std::to_string(++k), false, "light", {v, std::move(w)}});
      }

  g.polylines.push_back({"zigzag", true, "solid",
                         {{Rational(1), Rational(0), Rational(0)},
                          {Rational(1), Rational(1), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(1), Rational(1)},
                          {Rational(0), Rational(0), Rational(1)},
                          {Rational(1), Rational(0), Rational(1)}}});
  return g;
}

// Trace-vertical for the element pictures (x1, x2, scalar): move the scalar
// into the vertical slot. For the raw coordinate pictures the trace is the
// coordinate sum; an invertible rational change of basis puts it vertical.
inline QVec to_trace_vertical(int figure, const QVec& p) {
  if (figure == 1 || figure == 3) return {p[0], p[2], p[1]};
  return {p[0] - p[1], p[0] + p[1] + p[2], p[0] + p[1] - Rational(2) * p[2]};
}

}  // namespace fig_detail

inline FigureGeometry emit_figure(int which, CoordConvention convention) {
  FigureGeometry g;
  switch (which) {
    case 1: g = fig_detail::figure1(); break;
    case 2: g = fig_detail::figure2(); break;
    case 3: g = fig_detail::figure3(); break;
    case 4: g = fig_detail::figure4(); break;
    default: fail(ErrorCode::UnknownFigure, "emit_figure: figure must be 1, 2, 3, or 4");
  }
  g.convention = convention;
  if (convention == CoordConvention::TraceVertical) {
    g.metadata.emplace_back("trace_map",
                            g.figure == 1 || g.figure == 3
                                ? "vertical = scalar coordinate"
                                : "vertical = coordinate sum, via (x1-x2, x1+x2+x3, x1+x2-2x3)");
    for (VertexSet& s : g.vertex_sets)
      for (QVec& p : s.points) p = fig_detail::to_trace_vertical(g.figure, p);
    for (Polyline& l : g.polylines)
      for (QVec& p : l.points) p = fig_detail::to_trace_vertical(g.figure, p);
  }
  return g;
}

inline json figure_to_json(const FigureGeometry& g) {
  json meta = json::object();
  for (const auto& [k, v] : g.metadata) meta[k] = v;
  json vsets = json::array();
  for (const VertexSet& s : g.vertex_sets) {
    json pts = json::array();
    for (const QVec& p : s.points) pts.push_back(vec_to_json(p));
    vsets.push_back(json{{"name", s.name}, {"points", std::move(pts)}});
  }
  json lines = json::array();
  for (const Polyline& l : g.polylines) {
    json pts = json::array();
    for (const QVec& p : l.points) pts.push_back(vec_to_json(p));
    lines.push_back(json{{"name", l.name},
                         {"closed", l.closed},
                         {"style", l.style},
                         {"points", std::move(pts)}});
  }
  json j;
  j["figure"] = g.figure;
  j["convention"] = convention_name(g.convention);
  j["metadata"] = std::move(meta);
  j["vertex_sets"] = std::move(vsets);
  j["polylines"] = std::move(lines);
  return j;
}

namespace fig_detail {

// Oblique projection onto the page, exact until formatting: horizontal
// keeps index 0, the depth coordinate leans (2/5, 1/5). The vertical slot
// is index 1 under trace-vertical and index 2 under axes.
inline std::pair<Rational, Rational> project(const QVec& p, CoordConvention conv) {
  const Rational& depth = conv == CoordConvention::TraceVertical ? p[2] : p[1];
  const Rational& up = conv == CoordConvention::TraceVertical ? p[1] : p[2];
  return {p[0] + Rational(2, 5) * depth, up + Rational(1, 5) * depth};
}

/// Deterministic decimal with at most 2 fractional digits, round half away
/// from zero.
inline std::string svg_num(const Rational& v) {
  Int scaled = rat_num(v) * 200 / rat_den(v);
  Int units = (scaled >= 0 ? Int(scaled + 1) : Int(scaled - 1)) / 2;
  const bool neg = units < 0;
  Int a = neg ? Int(-units) : units;
  std::string out = (neg ? "-" : "") + Int(a / 100).str();
  Int fp = a % 100;
  if (fp != 0) {
    std::string f = fp.str();
    if (f.size() == 1) f.insert(f.begin(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

}  // namespace fig_detail

inline std::string figure_to_svg(const FigureGeometry& g, int scale = 120) {
  using fig_detail::project;
  using fig_detail::svg_num;
  const Rational s(scale);

  Rational xmin, xmax, ymin, ymax;
  bool first = true;
  auto eat = [&](const QVec& p) {
    auto [h, up] = project(p, g.convention);
    Rational x = s * h, y = -s * up;
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    } else {
      xmin = rat_min(xmin, x), xmax = rat_max(xmax, x);
      ymin = rat_min(ymin, y), ymax = rat_max(ymax, y);
    }
  };
  for (const VertexSet& vs : g.vertex_sets)
    for (const QVec& p : vs.points) eat(p);
  for (const Polyline& l : g.polylines)
    for (const QVec& p : l.points) eat(p);
  if (first) fail(ErrorCode::EmptyInput, "figure_to_svg: no geometry");

  const Rational margin(20);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += svg_num(xmin - margin) + " " + svg_num(ymin - margin) + " ";
  svg += svg_num(xmax - xmin + 2 * margin) + " " + svg_num(ymax - ymin + 2 * margin) + "\">\n";

  auto coords = [&](const QVec& p) {
    auto [h, up] = project(p, g.convention);
    return svg_num(s * h) + " " + svg_num(-s * up);
  };
  for (const Polyline& l : g.polylines) {
    std::string d;
    for (std::size_t i = 0; i < l.points.size(); ++i)
      d += (i == 0 ? "M " : " L ") + coords(l.points[i]);
    if (l.closed) d += " Z";
    std::string stroke = l.style == "light" ? "#999999" : "#222222";
    std::string width = l.style == "light" ? "1" : "1.5";
    svg += "  <path data-name=\"" + l.name + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" +
           stroke + "\" stroke-width=\"" + width + "\"";
    if (l.style == "dotted") svg += " stroke-dasharray=\"4 3\"";
    svg += "/>\n";
  }
  for (const VertexSet& vs : g.vertex_sets)
    for (std::size_t i = 0; i < vs.points.size(); ++i) {
      auto [h, up] = project(vs.points[i], g.convention);
      svg += "  <circle data-name=\"" + vs.name + "_" + std::to_string(i + 1) + "\" cx=\"" +
             svg_num(s * h) + "\" cy=\"" + svg_num(-s * up) + "\" r=\"3\" fill=\"#222222\"/>\n";
    }
  svg += "</svg>\n";
  return svg;
}

}  // namespace bnou
