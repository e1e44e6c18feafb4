#include <catch2/catch_amalgamated.hpp>

#include "bnou/figures.hpp"

using namespace bnou;

namespace {

QVec p3(long a, long b, long c) { return QVec{Rational(a), Rational(b), Rational(c)}; }

const Polyline* line_named(const FigureGeometry& g, const std::string& name) {
  for (const Polyline& l : g.polylines)
    if (l.name == name) return &l;
  return nullptr;
}

const VertexSet* set_named(const FigureGeometry& g, const std::string& name) {
  for (const VertexSet& v : g.vertex_sets)
    if (v.name == name) return &v;
  return nullptr;
}

std::string meta(const FigureGeometry& g, const std::string& key) {
  for (const auto& [k, v] : g.metadata)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("rational circle points") {
  CHECK(circle_point(Rational(0)) == QVec{Rational(1), Rational(0)});
  CHECK(circle_point(Rational(1)) == QVec{Rational(0), Rational(1)});
  CHECK(circle_point(Rational(-1)) == QVec{Rational(0), Rational(-1)});
  for (const QVec& p : unit_circle_samples(6)) CHECK(p[0] * p[0] + p[1] * p[1] == Rational(1));
  CHECK(unit_circle_samples(6).size() == 24);
}

TEST_CASE("simplex-base figure pins its vertex lists") {
  const FigureGeometry g = emit_figure(2, CoordConvention::Axes);
  const VertexSet* base = set_named(g, "base_vertices");
  REQUIRE(base != nullptr);
  CHECK(base->points == std::vector<QVec>{p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1)});
  const VertexSet* ball = set_named(g, "ball_vertices");
  REQUIRE(ball != nullptr);
  CHECK(ball->points == std::vector<QVec>{p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1), p3(-1, 0, 0),
                                          p3(0, -1, 0), p3(0, 0, -1)});
  const Polyline* tri = line_named(g, "base_triangle");
  REQUIRE(tri != nullptr);
  CHECK(tri->closed);
  CHECK(tri->points.size() == 3);
  // twelve octahedron edges
  int edges = 0;
  for (const Polyline& l : g.polylines)
    if (l.name.rfind("ball_edge_", 0) == 0) ++edges;
  CHECK(edges == 12);
}

TEST_CASE("cube figure pins the skew hexagonal cycle") {
  const FigureGeometry g = emit_figure(4, CoordConvention::Axes);
  const Polyline* zig = line_named(g, "zigzag");
  REQUIRE(zig != nullptr);
  CHECK(zig->closed);
  CHECK(zig->points == std::vector<QVec>{p3(1, 0, 0), p3(1, 1, 0), p3(0, 1, 0), p3(0, 1, 1),
                                         p3(0, 0, 1), p3(1, 0, 1)});
  // consecutive cycle points differ in exactly one coordinate
  for (std::size_t i = 0; i < 6; ++i) {
    const QVec& a = zig->points[i];
    const QVec& b = zig->points[(i + 1) % 6];
    int diff = 0;
    for (int k = 0; k < 3; ++k)
      if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)]) ++diff;
    CHECK(diff == 1);
  }
  const VertexSet* cube = set_named(g, "cube_vertices");
  REQUIRE(cube != nullptr);
  CHECK(cube->points.size() == 8);
}

TEST_CASE("cone figure carries its derived circle data") {
  const FigureGeometry g = emit_figure(3, CoordConvention::Axes);
  CHECK(meta(g, "circle_height") == "1/2");
  CHECK(meta(g, "circle_radius") == "1/2");
  CHECK(meta(g, "circle_derivation").find("derived") != std::string::npos);
  const Polyline* circle = line_named(g, "effect_circle");
  REQUIRE(circle != nullptr);
  CHECK(circle->style == "dotted");
  // points sit on x^2 + y^2 = r^2 at the stated height, scalar coordinate last
  for (const QVec& p : circle->points) {
    CHECK(p[2] == Rational(1, 2));
    CHECK(p[0] * p[0] + p[1] * p[1] == Rational(1, 4));
  }
}

TEST_CASE("base circle of the disk figure sits at trace one") {
  const FigureGeometry g = emit_figure(1, CoordConvention::Axes);
  const Polyline* ring = line_named(g, "base_circle");
  REQUIRE(ring != nullptr);
  CHECK(ring->closed);
  for (const QVec& p : ring->points) {
    CHECK(p[2] == Rational(1));
    CHECK(p[0] * p[0] + p[1] * p[1] == Rational(1));
  }
  const Polyline* bottom = line_named(g, "ball_bottom");
  REQUIRE(bottom != nullptr);
  for (const QVec& p : bottom->points) CHECK(p[2] == Rational(-1));
}

TEST_CASE("trace-vertical convention puts the trace on the vertical axis") {
  const FigureGeometry g1 = emit_figure(1, CoordConvention::TraceVertical);
  const Polyline* ring = line_named(g1, "base_circle");
  REQUIRE(ring != nullptr);
  for (const QVec& p : ring->points) CHECK(p[1] == Rational(1));

  const FigureGeometry g2 = emit_figure(2, CoordConvention::TraceVertical);
  const VertexSet* base = set_named(g2, "base_vertices");
  REQUIRE(base != nullptr);
  for (const QVec& p : base->points) CHECK(p[1] == Rational(1));
  CHECK(meta(g2, "trace_map") != "");

  const FigureGeometry g4 = emit_figure(4, CoordConvention::TraceVertical);
  const Polyline* zig = line_named(g4, "zigzag");
  REQUIRE(zig != nullptr);
  // the hexagon's vertices have coordinate sums 1 and 2
  for (const QVec& p : zig->points) CHECK((p[1] == Rational(1) || p[1] == Rational(2)));
}

TEST_CASE("figure conventions label themselves") {
  CHECK(emit_figure(1, CoordConvention::Axes).convention == CoordConvention::Axes);
  CHECK(convention_name(CoordConvention::TraceVertical) == std::string("trace-vertical"));
  CHECK(convention_name(CoordConvention::Axes) == std::string("axes"));
  CHECK_THROWS_AS(emit_figure(0, CoordConvention::Axes), Error);
  CHECK_THROWS_AS(emit_figure(5, CoordConvention::Axes), Error);
}

TEST_CASE("emission is deterministic, svg is well formed") {
  for (int which = 1; which <= 4; ++which) {
    for (CoordConvention conv : {CoordConvention::TraceVertical, CoordConvention::Axes}) {
      const std::string a = figure_to_json(emit_figure(which, conv)).dump(2);
      const std::string b = figure_to_json(emit_figure(which, conv)).dump(2);
      CHECK(a == b);
      const std::string s = figure_to_svg(emit_figure(which, conv));
      CHECK(s == figure_to_svg(emit_figure(which, conv)));
      CHECK(s.rfind("<svg", 0) == 0);
      CHECK(s.find("viewBox") != std::string::npos);
      CHECK(s.find("</svg>") != std::string::npos);
    }
  }
}

TEST_CASE("figure json carries the pinned keys") {
  const json j = figure_to_json(emit_figure(2, CoordConvention::Axes));
  CHECK(j.at("figure") == 2);
  CHECK(j.at("convention") == "axes");
  CHECK(j.contains("metadata"));
  CHECK(j.at("vertex_sets").is_array());
  CHECK(j.at("polylines").is_array());
  CHECK(j.at("vertex_sets")[0].at("name") == "base_vertices");
  CHECK(j.at("vertex_sets")[0].at("points")[0] == json::array({"1", "0", "0"}));
}
