#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/exact.hpp"

namespace toric {

/// Strictly convex polygon with rational vertices, stored counterclockwise and
/// starting from the lexicographically smallest vertex.
class Polygon {
public:
  const std::vector<RatVec2>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const RatVec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// True when the points handed to make_polygon were clockwise.
  bool reversed_input() const noexcept { return reversed_input_; }

  /// Compares vertex sequences only.
  friend bool operator==(const Polygon& lhs, const Polygon& rhs) {
    return lhs.vertices_ == rhs.vertices_;
  }

private:
  friend Polygon make_polygon(std::vector<RatVec2> points);
  Polygon(std::vector<RatVec2> vertices, bool reversed)
      : vertices_(std::move(vertices)), reversed_input_(reversed) {}

  std::vector<RatVec2> vertices_;
  bool reversed_input_ = false;
};

/// Validates and normalizes a vertex cycle. Throws TooFewVertices,
/// RepeatedVertex, CollinearVertices or NonConvex with the offending index
/// (index into the input sequence).
Polygon make_polygon(std::vector<RatVec2> points);

struct EdgeData {
  std::size_t tail_index = 0;
  IntVec2 direction;      ///< primitive, along the edge in CCW order
  IntVec2 inward_normal;  ///< direction rotated left by 90 degrees
  Rational lattice_length;
};

/// One record per edge; edge i runs from vertex i to vertex i+1.
std::vector<EdgeData> edge_data(const Polygon& polygon);

struct DelzantFailure {
  std::size_t pair_index = 0; ///< normals (pair_index, pair_index + 1)
  BigInt determinant;
};

struct DelzantReport {
  bool is_delzant = false;
  std::vector<IntVec2> normals;
  std::vector<DelzantFailure> failures;
  bool reversed_input = false;
};

/// det2(u_i, u_{i+1}) over the cyclic sequence of primitive inward normals.
DelzantReport verify_delzant(const Polygon& polygon);

inline bool is_delzant(const Polygon& polygon) { return verify_delzant(polygon).is_delzant; }

Polygon apply_map(const Polygon& polygon, const UnimodularAffine& map);

/// A map T with apply_map(first, T) == second, if one exists.
std::optional<UnimodularAffine> congruent(const Polygon& first, const Polygon& second);

/// Edge count minus two. Throws NotDelzant for non-Delzant input.
std::size_t second_betti_from_edges(const Polygon& polygon);

} // namespace toric
