#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "toric/circle_actions.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

Polygon poly(std::initializer_list<std::pair<long long, long long>> pts) {
  std::vector<RatVec2> v;
  for (auto [x, y] : pts) v.push_back(point(x, y));
  return make_polygon(std::move(v));
}

CircleDirection dir(long long x, long long y) { return CircleDirection(IntVec2(x, y)); }

IsolatedPoint iso(Rational moment, long long w0, long long w1) { return {std::move(moment), {BigInt(w0), BigInt(w1)}}; }

FatVertex fat(Rational moment, Rational area, std::int64_t genus = 0) {
  return {std::move(moment), std::move(area), genus};
}

std::vector<Polygon> sample_polygons() {
  Rng rng(71);
  std::vector<Polygon> out = {
      poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
      poly({{0, 0}, {2, 0}, {0, 2}}),
      poly({{1, 0}, {3, 0}, {3, 2}, {2, 3}, {0, 3}, {0, 1}}),
  };
  for (int i = 0; i < 8; ++i) out.push_back(apply_map(standard_trapezoid(random_params(rng)), random_affine(rng, 4)));
  return out;
}

/// Negative weights counted directly from the polygon: edges at a vertex
/// along which <x, xi> decreases.
std::size_t descending_edges(const Polygon& p, std::size_t i, const IntVec2& xi) {
  const RatVec2 here = p.vertex(i);
  const RatVec2 xi_r = to_rational(xi);
  std::size_t count = 0;
  for (const RatVec2& other : {p.vertex(i + 1), p.vertex(i + p.size() - 1)})
    if (inner<Rational>(xi_r, other - here) < 0) ++count;
  return count;
}

} // namespace

TEST(CircleDirection, RejectsNonPrimitive) {
  EXPECT_NO_THROW(dir(2, -3));
  for (auto [x, y] : {std::pair{0, 0}, {2, 0}, {4, 6}}) {
    try {
      dir(x, y);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonPrimitiveDirection);
    }
  }
}

TEST(CircleGraph, TrapezoidHorizontal) {
  const LabeledGraph g = circle_graph(standard_trapezoid({2, 1, 2}), dir(1, 0));
  const LabeledGraph expected{{fat(0, 1), iso(1, -1, 2), iso(3, -2, -1)}, {ZkEdge{2, {1, 2}, {1, 3}}}};
  EXPECT_EQ(g, expected);
}

TEST(CircleGraph, TrapezoidVertical) {
  const LabeledGraph g = circle_graph(standard_trapezoid({2, 1, 2}), dir(0, 1));
  const LabeledGraph expected{{fat(0, 3), fat(1, 1)}, {}};
  EXPECT_EQ(g, expected);
}

TEST(CircleGraph, SquareDiagonal) {
  const LabeledGraph g = circle_graph(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), dir(1, 1));
  ASSERT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.nodes[0], GraphNode(iso(0, 1, 1)));
  EXPECT_EQ(g.nodes[1], GraphNode(iso(1, -1, 1)));
  EXPECT_EQ(g.nodes[2], GraphNode(iso(1, -1, 1)));
  EXPECT_EQ(g.nodes[3], GraphNode(iso(2, -1, -1)));
  EXPECT_TRUE(g.edges.empty());
}

TEST(CircleGraph, RequiresDelzant) {
  try {
    circle_graph(poly({{0, 0}, {2, 0}, {0, 1}}), dir(1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDelzant);
  }
}

TEST(CircleGraph, WeightsMatchPolygonGeometry) {
  for (const Polygon& p : sample_polygons())
    for (const CircleDirection& xi : primitive_directions(3)) {
      const LabeledGraph g = circle_graph(p, xi);
      EXPECT_NO_THROW(validate(g));
      std::size_t isolated = 0, surfaces = 0;
      for (const GraphNode& n : g.nodes) (std::holds_alternative<IsolatedPoint>(n) ? isolated : surfaces)++;
      // Every vertex is either an isolated point or the end of a fixed edge.
      EXPECT_EQ(isolated + 2 * surfaces, p.size());

      std::vector<std::size_t> polygon_indices, graph_indices;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::size_t down = descending_edges(p, i, xi.xi());
        const Rational h = inner<Rational>(to_rational(xi.xi()), p.vertex(i));
        const bool on_fixed_edge =
            inner<Rational>(to_rational(xi.xi()), p.vertex(i + 1)) == h ||
            inner<Rational>(to_rational(xi.xi()), p.vertex(i + p.size() - 1)) == h;
        if (!on_fixed_edge) polygon_indices.push_back(2 * down);
      }
      for (const GraphNode& n : g.nodes)
        if (const auto* pt = std::get_if<IsolatedPoint>(&n))
          graph_indices.push_back(2 * ((pt->weights[0] < 0) + (pt->weights[1] < 0)));
      std::sort(polygon_indices.begin(), polygon_indices.end());
      std::sort(graph_indices.begin(), graph_indices.end());
      EXPECT_EQ(polygon_indices, graph_indices);
    }
}

TEST(GraphValidation, RejectsMalformedGraphs) {
  const auto expect_invalid = [](const LabeledGraph& g) {
    try {
      validate(g);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
    }
  };
  expect_invalid({{iso(0, 1, 1)}, {}});
  expect_invalid({{iso(0, 1, 0), iso(1, -1, -1)}, {}});
  expect_invalid({{iso(0, 2, 1), iso(1, -1, -1)}, {}});
  expect_invalid({{fat(0, 0), iso(1, -1, -1)}, {}});
  expect_invalid({{iso(0, 1, 1), iso(0, 1, 1), iso(1, -1, -1)}, {}});
  expect_invalid({{iso(0, 1, 2), iso(2, -2, -1)}, {ZkEdge{1, {0, 1}, {0, 2}}}});
  expect_invalid({{iso(0, 1, 2), iso(2, -2, -1)}, {ZkEdge{2, {0, 5}, {0, 2}}}});
  expect_invalid({{iso(0, 1, 2), iso(2, -2, -1)}, {ZkEdge{2, {0, 1}, {0, 3}}}});
  EXPECT_NO_THROW(validate(LabeledGraph{{iso(0, 1, 2), iso(2, -2, -1)}, {ZkEdge{2, {0, 1}, {0, 2}}}}));
}

TEST(Isomorphism, TranslationInvariance) {
  const Polygon t = standard_trapezoid({2, 1, 2});
  const Polygon shifted = apply_map(t, UnimodularAffine::shift(point(Rational(7, 3), Rational(0))));
  const LabeledGraph g = circle_graph(t, dir(1, 0));
  const LabeledGraph h = circle_graph(shifted, dir(1, 0));
  EXPECT_NE(g, h);
  EXPECT_TRUE(graphs_isomorphic(g, h));
  EXPECT_FALSE(graphs_isomorphic(g, circle_graph(t, dir(0, 1))));
}

TEST(Isomorphism, NegatedDirectionIsAFlip) {
  for (const Polygon& p : sample_polygons())
    for (const CircleDirection& xi : primitive_directions(2)) {
      const LabeledGraph g = circle_graph(p, xi);
      const LabeledGraph flipped = circle_graph(p, CircleDirection(IntVec2(-xi.xi())));
      EXPECT_TRUE(graphs_isomorphic(g, flipped, true));
      EXPECT_TRUE(graphs_isomorphic(g, g));
    }
  // The m = 2 trapezoid's horizontal graph is not symmetric under the flip.
  const Polygon t = standard_trapezoid({2, 1, 2});
  EXPECT_FALSE(graphs_isomorphic(circle_graph(t, dir(1, 0)), circle_graph(t, dir(-1, 0))));
}

TEST(Isomorphism, EquivariantUnderUnimodularMaps) {
  Rng rng(73);
  for (const Polygon& p : sample_polygons())
    for (int i = 0; i < 5; ++i) {
      const UnimodularAffine t = random_affine(rng, 4);
      const Polygon image = apply_map(p, t);
      const IntMat2 back = inverse_unimodular(t.linear()).transpose();
      for (const CircleDirection& xi : primitive_directions(2)) {
        const CircleDirection moved(IntVec2(back * xi.xi()));
        EXPECT_TRUE(graphs_isomorphic(circle_graph(p, xi), circle_graph(image, moved)));
      }
    }
}

TEST(FixedPointData, IndicesFromGraph) {
  const FixedPointData d = fixed_point_data(circle_graph(standard_trapezoid({2, 1, 2}), dir(1, 0)));
  const FixedPointData expected{{SurfaceFixed{0, 0}, IsolatedFixed{2}, IsolatedFixed{4}}};
  EXPECT_EQ(d, expected);

  const FixedPointData v = fixed_point_data(circle_graph(standard_trapezoid({2, 1, 2}), dir(0, 1)));
  EXPECT_EQ(v, (FixedPointData{{SurfaceFixed{0, 0}, SurfaceFixed{2, 0}}}));
}

TEST(FixedPointData, InteriorSurfaceIsImpossible) {
  try {
    fixed_point_data(LabeledGraph{{iso(0, 1, 1), fat(1, 1), iso(2, -1, -1)}, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InteriorFixedSurface);
  }
}

TEST(FixedPointData, Validation) {
  EXPECT_THROW(validate(FixedPointData{{IsolatedFixed{1}}}), Error);
  EXPECT_THROW(validate(FixedPointData{{SurfaceFixed{4, 0}}}), Error);
  EXPECT_THROW(validate(FixedPointData{{SurfaceFixed{0, -1}}}), Error);
  EXPECT_THROW(validate(FixedPointData{{IsolatedFixed{0}, IsolatedFixed{0}, IsolatedFixed{4}}}), Error);
  EXPECT_THROW(validate(FixedPointData{{IsolatedFixed{2}, IsolatedFixed{4}}}), Error);
  EXPECT_NO_THROW(validate(FixedPointData{{IsolatedFixed{0}, IsolatedFixed{4}}}));
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_numbers(FixedPointData{{IsolatedFixed{0}, IsolatedFixed{2}, IsolatedFixed{2}, IsolatedFixed{4}}}),
            (BettiNumbers{1, 0, 2, 0, 1}));
  EXPECT_EQ(betti_numbers(FixedPointData{{SurfaceFixed{0, 1}, SurfaceFixed{2, 1}}}), (BettiNumbers{1, 2, 2, 2, 1}));
  EXPECT_EQ(betti_numbers(FixedPointData{{IsolatedFixed{0}, IsolatedFixed{2}, IsolatedFixed{4}}}),
            (BettiNumbers{1, 0, 1, 0, 1}));
}

TEST(Betti, ToricPolygonsGiveEdgeCount) {
  for (const Polygon& p : sample_polygons()) {
    const std::int64_t b2 = static_cast<std::int64_t>(second_betti_from_edges(p));
    for (const CircleDirection& xi : primitive_directions(3))
      EXPECT_EQ(betti_numbers(fixed_point_data(circle_graph(p, xi))), (BettiNumbers{1, 0, b2, 0, 1}));
  }
}

TEST(Extendable, ToricGraphsAlwaysExtend) {
  for (const Polygon& p : sample_polygons())
    for (const CircleDirection& xi : primitive_directions(3)) {
      const ExtendabilityReport r = check_extendable(circle_graph(p, xi));
      EXPECT_TRUE(r.extendable);
      EXPECT_TRUE(r.diagnostics.empty());
    }
}

TEST(Extendable, PositiveGenusSurfaces) {
  const ExtendabilityReport r = check_extendable(LabeledGraph{{fat(0, 2, 1), fat(1, 2, 1)}, {}});
  EXPECT_FALSE(r.extendable);
  EXPECT_EQ(r.diagnostics,
            (std::vector<std::string>{"fixed surface at moment 0 has genus 1", "fixed surface at moment 1 has genus 1"}));
}

TEST(Extendable, CrowdedLevel) {
  // Three isolated points at moment 1.
  const LabeledGraph three{{iso(0, 1, 1), iso(1, -1, 1), iso(1, -1, 1), iso(1, -1, 1), iso(2, -1, -1)}, {}};
  const ExtendabilityReport r = check_extendable(three);
  EXPECT_FALSE(r.extendable);
  EXPECT_EQ(r.diagnostics, (std::vector<std::string>{"level 1 has 3 non-free orbits"}));

  // Two points at moment 1 plus a Z_2-sphere crossing that level.
  const LabeledGraph crossing{{iso(0, 1, 2), iso(1, -1, 1), iso(1, -1, 1), iso(2, -2, -1)},
                              {ZkEdge{2, {0, 3}, {0, 2}}}};
  const ExtendabilityReport c = check_extendable(crossing);
  EXPECT_FALSE(c.extendable);
  EXPECT_EQ(c.diagnostics, (std::vector<std::string>{"level 1 has 3 non-free orbits"}));
}

TEST(Dot, RendersLevelsAndEdges) {
  const std::string dot = to_dot(circle_graph(standard_trapezoid({2, 1, 2}), dir(1, 0)));
  EXPECT_EQ(dot.rfind("graph circle_action {\n", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT;"), std::string::npos);
  EXPECT_NE(dot.find("n0 [shape=box, label=\"moment 0\\narea 1\\ngenus 0\"];"), std::string::npos);
  EXPECT_NE(dot.find("n1 [shape=circle, label=\"moment 1\\nweights -1, 2\"];"), std::string::npos);
  EXPECT_NE(dot.find("n1 -- n2 [label=\"Z_2\"];"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
