#include "toric/polygon.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::string at_index(const char* what, std::size_t index) {
  return std::string(what) + " at index " + std::to_string(index);
}

} // namespace

Polygon make_polygon(std::vector<RatVec2> points) {
  const std::size_t n = points.size();
  if (n < 3)
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));

  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (points[i] == points[j]) throw Error(ErrorCode::RepeatedVertex, at_index("repeated vertex", j));

  std::vector<int> turns(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec2& prev = points[(i + n - 1) % n];
    const RatVec2& next = points[(i + 1) % n];
    turns[i] = sign(cross<Rational>(prev, points[i], next));
    if (turns[i] == 0) throw Error(ErrorCode::CollinearVertices, at_index("collinear vertices", i));
  }
  for (std::size_t i = 1; i < n; ++i)
    if (turns[i] != turns[0]) throw Error(ErrorCode::NonConvex, at_index("non-convex", i));

  // Consistent turning still admits star-shaped self-intersections, so every
  // vertex must lie strictly on the inner side of every edge.
  const int orientation = turns[0];
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec2& tail = points[i];
    const RatVec2& head = points[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (sign(cross<Rational>(tail, head, points[j])) != orientation)
        throw Error(ErrorCode::NonConvex, at_index("non-convex", j));
    }
  }

  const bool reversed = orientation < 0;
  if (reversed) std::reverse(points.begin(), points.end());
  const auto first = std::min_element(points.begin(), points.end(), lex_less);
  std::rotate(points.begin(), first, points.end());
  return Polygon(std::move(points), reversed);
}

std::vector<EdgeData> edge_data(const Polygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<EdgeData> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec2 delta = polygon.vertex(i + 1) - polygon.vertex(i);
    EdgeData edge;
    edge.tail_index = i;
    edge.direction = integer_direction(delta);
    edge.inward_normal = rotate_left<BigInt>(edge.direction);
    edge.lattice_length = edge.direction.x() != 0 ? Rational(delta.x() / Rational(edge.direction.x()))
                                                  : Rational(delta.y() / Rational(edge.direction.y()));
    edges.push_back(std::move(edge));
  }
  return edges;
}

DelzantReport verify_delzant(const Polygon& polygon) {
  DelzantReport report;
  report.reversed_input = polygon.reversed_input();
  for (const EdgeData& edge : edge_data(polygon)) report.normals.push_back(edge.inward_normal);

  const std::size_t n = report.normals.size();
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = det2<BigInt>(report.normals[i], report.normals[(i + 1) % n]);
    if (d != 1) report.failures.push_back({i, std::move(d)});
  }
  report.is_delzant = report.failures.empty();
  return report;
}

Polygon apply_map(const Polygon& polygon, const UnimodularAffine& map) {
  std::vector<RatVec2> image;
  image.reserve(polygon.size());
  for (const RatVec2& v : polygon.vertices()) image.push_back(map(v));
  return make_polygon(std::move(image));
}

std::optional<UnimodularAffine> congruent(const Polygon& first, const Polygon& second) {
  const std::size_t n = first.size();
  if (n != second.size()) return std::nullopt;

  const std::vector<EdgeData> source_edges = edge_data(first);
  const std::vector<EdgeData> target_edges = edge_data(second);

  IntMat2 source;
  source.col(0) = source_edges[0].direction;
  source.col(1) = source_edges[1].direction;
  const BigInt source_det = source.determinant();
  IntMat2 source_adjugate;
  source_adjugate << source(1, 1), -source(0, 1), -source(1, 0), source(0, 0);

  const auto wrap = [n](std::ptrdiff_t i) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
  };

  for (const int orientation : {1, -1}) {
    for (std::size_t offset = 0; offset < n; ++offset) {
      const auto j = static_cast<std::ptrdiff_t>(offset);
      // Orientation-reversing maps send edge i onto edge (offset - i - 1)
      // traversed backwards.
      const auto target_direction = [&](std::size_t i) -> IntVec2 {
        const auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation > 0) return target_edges[wrap(j + k)].direction;
        return -target_edges[wrap(j - k - 1)].direction;
      };
      const auto target_vertex = [&](std::size_t i) -> const RatVec2& {
        const auto k = static_cast<std::ptrdiff_t>(i);
        return second.vertex(orientation > 0 ? wrap(j + k) : wrap(j - k));
      };

      IntMat2 target;
      target.col(0) = target_direction(0);
      target.col(1) = target_direction(1);
      IntMat2 scaled = target * source_adjugate;
      bool integral = true;
      for (Eigen::Index r = 0; r < 2 && integral; ++r)
        for (Eigen::Index c = 0; c < 2 && integral; ++c)
          integral = scaled(r, c) % source_det == 0;
      if (!integral) continue;
      IntMat2 linear = scaled / source_det;
      if (linear.determinant() != orientation) continue;

      bool directions_match = true;
      for (std::size_t i = 0; i < n && directions_match; ++i)
        directions_match = IntVec2(linear * source_edges[i].direction) == target_direction(i);
      if (!directions_match) continue;

      const RatMat2 r = to_rational(linear);
      RatVec2 translation = target_vertex(0) - r * first.vertex(0);
      UnimodularAffine map(std::move(linear), std::move(translation));
      bool vertices_match = true;
      for (std::size_t i = 0; i < n && vertices_match; ++i)
        vertices_match = map(first.vertex(i)) == target_vertex(i);
      if (vertices_match) return map;
    }
  }
  return std::nullopt;
}

std::size_t second_betti_from_edges(const Polygon& polygon) {
  if (!is_delzant(polygon)) throw Error(ErrorCode::NotDelzant, "polygon is not Delzant");
  return polygon.size() - 2;
}

} // namespace toric
