#pragma once

// Circle subgroups of the 2-torus acting on a toric 4-manifold, their labeled
// fixed-point graphs, and the Morse-Bott bookkeeping built on top of them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "toric/exact.hpp"
#include "toric/polygon.hpp"

namespace toric {

/// Primitive generator xi of a circle in the torus; the circle's moment map
/// is x -> <x, xi>.
class CircleDirection {
public:
  /// Throws NonPrimitiveDirection for zero or non-primitive input.
  explicit CircleDirection(IntVec2 xi);
  const IntVec2& xi() const noexcept { return xi_; }

private:
  IntVec2 xi_;
};

struct IsolatedPoint {
  Rational moment;
  std::array<BigInt, 2> weights; ///< nonzero, ascending
  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};

/// Fixed surface.
struct FatVertex {
  Rational moment;
  Rational area;
  std::int64_t genus = 0;
  friend bool operator==(const FatVertex&, const FatVertex&) = default;
};

using GraphNode = std::variant<IsolatedPoint, FatVertex>;

const Rational& moment_of(const GraphNode& node);

/// Z_k-sphere, k >= 2. endpoints[0] sits at interval[0] < interval[1].
struct ZkEdge {
  BigInt k;
  std::array<std::size_t, 2> endpoints{};
  std::array<Rational, 2> interval;
  friend bool operator==(const ZkEdge&, const ZkEdge&) = default;
};

struct LabeledGraph {
  std::vector<GraphNode> nodes;
  std::vector<ZkEdge> edges;
  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

/// Throws InvalidGraph on bad labels, dangling or inconsistent edges, or a
/// minimum/maximum shared by several nodes.
void validate(const LabeledGraph& graph);

/// Reads the graph of the circle generated by `direction` off a Delzant
/// polygon:
///  - an edge orthogonal to xi is a fixed surface (area = lattice length),
///  - any other vertex is an isolated point whose weights are <xi, v> for the
///    two primitive edge directions v leaving it,
///  - an edge with |<xi, v>| = k >= 2 is a Z_k-sphere.
/// Nodes are sorted by moment. Throws NotDelzant.
LabeledGraph circle_graph(const Polygon& polygon, const CircleDirection& direction);

/// Equality up to translating moments (and, with allow_flip, negating them).
bool graphs_isomorphic(const LabeledGraph& first, const LabeledGraph& second, bool allow_flip = false);

struct IsolatedFixed {
  int index = 0;
  friend bool operator==(const IsolatedFixed&, const IsolatedFixed&) = default;
};

struct SurfaceFixed {
  int index = 0;
  std::int64_t genus = 0;
  friend bool operator==(const SurfaceFixed&, const SurfaceFixed&) = default;
};

using FixedComponent = std::variant<IsolatedFixed, SurfaceFixed>;

struct FixedPointData {
  std::vector<FixedComponent> components;
  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

/// Throws InvalidFixedData unless indices are even and in range (isolated
/// 0/2/4, surface 0/2), genera are nonnegative and exactly one component has
/// index 0.
void validate(const FixedPointData& data);

/// Morse index per node: twice the number of negative weights for isolated
/// points, 0 or 2 for a minimal or maximal surface. Throws
/// InteriorFixedSurface for a surface strictly between the extrema.
FixedPointData fixed_point_data(const LabeledGraph& graph);

using BettiNumbers = std::array<std::int64_t, 5>;

/// Perfect Morse-Bott count: a component of index i and genus g adds 1 to
/// b_i, and a surface additionally adds 2g to b_{i+1} and 1 to b_{i+2}.
BettiNumbers betti_numbers(const FixedPointData& data);

struct ExtendabilityReport {
  bool extendable = false;
  std::vector<std::string> diagnostics;
};

/// Toric-extension criterion: every fixed surface has genus 0, and every
/// non-extremal level carries at most two non-free orbits (isolated points
/// at that level plus Z_k-spheres crossing it).
ExtendabilityReport check_extendable(const LabeledGraph& graph);

/// Graphviz rendering; nodes ranked bottom-to-top by moment.
std::string to_dot(const LabeledGraph& graph);

} // namespace toric
