#include "toric/circle_actions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace toric {

CircleDirection::CircleDirection(IntVec2 xi) : xi_(std::move(xi)) {
  if (!is_primitive(xi_))
    throw Error(ErrorCode::NonPrimitiveDirection,
                "circle direction must be a primitive integer vector, got (" + xi_.x().str() + "," +
                    xi_.y().str() + ")");
}

const Rational& moment_of(const GraphNode& node) {
  return std::visit([](const auto& n) -> const Rational& { return n.moment; }, node);
}

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

std::pair<Rational, Rational> moment_range(const LabeledGraph& graph) {
  Rational lo = moment_of(graph.nodes.front());
  Rational hi = lo;
  for (const GraphNode& node : graph.nodes) {
    lo = std::min(lo, moment_of(node));
    hi = std::max(hi, moment_of(node));
  }
  return {lo, hi};
}

void invalid_graph(const std::string& detail) { throw Error(ErrorCode::InvalidGraph, detail); }

} // namespace

void validate(const LabeledGraph& graph) {
  if (graph.nodes.size() < 2) invalid_graph("graph needs at least two nodes");
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const std::string where = "node " + std::to_string(i);
    if (const auto* point = std::get_if<IsolatedPoint>(&graph.nodes[i])) {
      if (point->weights[0] == 0 || point->weights[1] == 0) invalid_graph(where + ": zero weight");
      if (point->weights[0] > point->weights[1]) invalid_graph(where + ": weights not ascending");
    } else {
      const auto& surface = std::get<FatVertex>(graph.nodes[i]);
      if (surface.area <= 0) invalid_graph(where + ": area must be positive");
      if (surface.genus < 0) invalid_graph(where + ": genus must be nonnegative");
    }
  }

  const auto [lo, hi] = moment_range(graph);
  if (lo == hi) invalid_graph("minimum and maximum moments coincide");
  const auto at = [&](const Rational& value) {
    return std::count_if(graph.nodes.begin(), graph.nodes.end(),
                         [&](const GraphNode& n) { return moment_of(n) == value; });
  };
  if (at(lo) != 1) invalid_graph("minimum moment must be attained by exactly one node");
  if (at(hi) != 1) invalid_graph("maximum moment must be attained by exactly one node");

  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const ZkEdge& edge = graph.edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (edge.k < 2) invalid_graph(where + ": k must be at least 2");
    if (edge.endpoints[0] >= graph.nodes.size() || edge.endpoints[1] >= graph.nodes.size())
      invalid_graph(where + ": endpoint out of range");
    if (edge.endpoints[0] == edge.endpoints[1]) invalid_graph(where + ": loop");
    if (!(edge.interval[0] < edge.interval[1])) invalid_graph(where + ": empty moment interval");
    if (moment_of(graph.nodes[edge.endpoints[0]]) != edge.interval[0] ||
        moment_of(graph.nodes[edge.endpoints[1]]) != edge.interval[1])
      invalid_graph(where + ": interval does not match endpoint moments");
  }
}

LabeledGraph circle_graph(const Polygon& polygon, const CircleDirection& direction) {
  if (!is_delzant(polygon)) throw Error(ErrorCode::NotDelzant, "polygon is not Delzant");

  const IntVec2& xi = direction.xi();
  const RatVec2 xi_q = to_rational(xi);
  const std::vector<EdgeData> edges = edge_data(polygon);
  const std::size_t n = edges.size();
  const auto moment = [&](std::size_t vertex) { return inner<Rational>(polygon.vertex(vertex), xi_q); };

  std::vector<GraphNode> nodes;
  std::vector<std::size_t> node_of_vertex(n, kUnassigned);

  for (std::size_t i = 0; i < n; ++i) {
    if (inner<BigInt>(xi, edges[i].direction) != 0) continue;
    node_of_vertex[i] = node_of_vertex[(i + 1) % n] = nodes.size();
    nodes.emplace_back(FatVertex{moment(i), edges[i].lattice_length, 0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (node_of_vertex[i] != kUnassigned) continue;
    const IntVec2 back = -edges[(i + n - 1) % n].direction;
    std::array<BigInt, 2> weights{inner<BigInt>(xi, back), inner<BigInt>(xi, edges[i].direction)};
    if (weights[0] > weights[1]) std::swap(weights[0], weights[1]);
    node_of_vertex[i] = nodes.size();
    nodes.emplace_back(IsolatedPoint{moment(i), std::move(weights)});
  }

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return moment_of(nodes[lhs]) < moment_of(nodes[rhs]);
  });
  std::vector<std::size_t> position(nodes.size());
  LabeledGraph graph;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    graph.nodes.push_back(nodes[order[i]]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    BigInt k = abs(inner<BigInt>(xi, edges[i].direction));
    if (k < 2) continue;
    std::size_t low = position[node_of_vertex[i]];
    std::size_t high = position[node_of_vertex[(i + 1) % n]];
    if (moment_of(graph.nodes[high]) < moment_of(graph.nodes[low])) std::swap(low, high);
    graph.edges.push_back(
        ZkEdge{std::move(k), {low, high}, {moment_of(graph.nodes[low]), moment_of(graph.nodes[high])}});
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const ZkEdge& lhs, const ZkEdge& rhs) {
    return std::tie(lhs.endpoints, lhs.k) < std::tie(rhs.endpoints, rhs.k);
  });
  return graph;
}

namespace {

LabeledGraph normalized(const LabeledGraph& graph, bool flip) {
  LabeledGraph out = graph;
  if (flip) {
    for (GraphNode& node : out.nodes) {
      if (auto* point = std::get_if<IsolatedPoint>(&node)) {
        point->moment = -point->moment;
        point->weights = {-point->weights[1], -point->weights[0]};
      } else {
        auto& surface = std::get<FatVertex>(node);
        surface.moment = -surface.moment;
      }
    }
  }
  const Rational base = moment_range(out).first;
  for (GraphNode& node : out.nodes)
    std::visit([&](auto& n) { n.moment -= base; }, node);
  return out;
}

using EdgeKey = std::tuple<BigInt, std::size_t, std::size_t>;

std::vector<EdgeKey> edge_keys(const std::vector<ZkEdge>& edges, const std::vector<std::size_t>& map) {
  std::vector<EdgeKey> keys;
  for (const ZkEdge& edge : edges) {
    std::size_t a = map[edge.endpoints[0]];
    std::size_t b = map[edge.endpoints[1]];
    if (a > b) std::swap(a, b);
    keys.emplace_back(edge.k, a, b);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool match_nodes(const LabeledGraph& first, const LabeledGraph& second, std::vector<std::size_t>& map,
                 std::vector<bool>& used, std::size_t next, const std::vector<EdgeKey>& target_keys) {
  if (next == first.nodes.size()) return edge_keys(first.edges, map) == target_keys;
  for (std::size_t j = 0; j < second.nodes.size(); ++j) {
    if (used[j] || !(first.nodes[next] == second.nodes[j])) continue;
    used[j] = true;
    map[next] = j;
    if (match_nodes(first, second, map, used, next + 1, target_keys)) return true;
    used[j] = false;
  }
  return false;
}

bool isomorphic_normalized(const LabeledGraph& first, const LabeledGraph& second) {
  if (first.nodes.size() != second.nodes.size() || first.edges.size() != second.edges.size())
    return false;
  std::vector<std::size_t> identity(second.nodes.size());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const std::vector<EdgeKey> target_keys = edge_keys(second.edges, identity);
  std::vector<std::size_t> map(first.nodes.size(), kUnassigned);
  std::vector<bool> used(second.nodes.size(), false);
  return match_nodes(first, second, map, used, 0, target_keys);
}

} // namespace

bool graphs_isomorphic(const LabeledGraph& first, const LabeledGraph& second, bool allow_flip) {
  if (first.nodes.empty() || second.nodes.empty()) return first.nodes.empty() && second.nodes.empty();
  const LabeledGraph lhs = normalized(first, false);
  if (isomorphic_normalized(lhs, normalized(second, false))) return true;
  return allow_flip && isomorphic_normalized(lhs, normalized(second, true));
}

void validate(const FixedPointData& data) {
  int minima = 0;
  for (std::size_t i = 0; i < data.components.size(); ++i) {
    const std::string where = "component " + std::to_string(i);
    if (const auto* point = std::get_if<IsolatedFixed>(&data.components[i])) {
      if (point->index != 0 && point->index != 2 && point->index != 4)
        throw Error(ErrorCode::InvalidFixedData, where + ": isolated index must be 0, 2 or 4");
      minima += point->index == 0;
    } else {
      const auto& surface = std::get<SurfaceFixed>(data.components[i]);
      if (surface.index != 0 && surface.index != 2)
        throw Error(ErrorCode::InvalidFixedData, where + ": surface index must be 0 or 2");
      if (surface.genus < 0) throw Error(ErrorCode::InvalidFixedData, where + ": negative genus");
      minima += surface.index == 0;
    }
  }
  if (minima != 1)
    throw Error(ErrorCode::InvalidFixedData, "exactly one component must have index 0");
}

FixedPointData fixed_point_data(const LabeledGraph& graph) {
  validate(graph);
  const auto [lo, hi] = moment_range(graph);
  FixedPointData data;
  for (const GraphNode& node : graph.nodes) {
    if (const auto* point = std::get_if<IsolatedPoint>(&node)) {
      const int negatives = (point->weights[0] < 0) + (point->weights[1] < 0);
      data.components.emplace_back(IsolatedFixed{2 * negatives});
      continue;
    }
    const auto& surface = std::get<FatVertex>(node);
    if (surface.moment == lo) {
      data.components.emplace_back(SurfaceFixed{0, surface.genus});
    } else if (surface.moment == hi) {
      data.components.emplace_back(SurfaceFixed{2, surface.genus});
    } else {
      throw Error(ErrorCode::InteriorFixedSurface,
                  "interior fixed surface impossible (moment " + to_string(surface.moment) + ")");
    }
  }
  return data;
}

BettiNumbers betti_numbers(const FixedPointData& data) {
  validate(data);
  BettiNumbers betti{};
  for (const FixedComponent& component : data.components) {
    if (const auto* point = std::get_if<IsolatedFixed>(&component)) {
      betti[point->index] += 1;
    } else {
      const auto& surface = std::get<SurfaceFixed>(component);
      betti[surface.index] += 1;
      betti[surface.index + 1] += 2 * surface.genus;
      betti[surface.index + 2] += 1;
    }
  }
  return betti;
}

ExtendabilityReport check_extendable(const LabeledGraph& graph) {
  validate(graph);
  ExtendabilityReport report;

  for (const GraphNode& node : graph.nodes)
    if (const auto* surface = std::get_if<FatVertex>(&node); surface && surface->genus != 0)
      report.diagnostics.push_back("fixed surface at moment " + to_string(surface->moment) + " has genus " +
                                   std::to_string(surface->genus));

  std::set<Rational> critical;
  for (const GraphNode& node : graph.nodes) critical.insert(moment_of(node));
  for (const ZkEdge& edge : graph.edges) critical.insert(edge.interval.begin(), edge.interval.end());

  // The count is constant between consecutive critical values, so the
  // critical values and one midpoint per gap cover every level.
  std::vector<Rational> levels(critical.begin(), critical.end());
  for (auto it = critical.begin(); std::next(it) != critical.end(); ++it)
    levels.push_back((*it + *std::next(it)) / 2);
  std::sort(levels.begin(), levels.end());

  const Rational& lo = *critical.begin();
  const Rational& hi = *critical.rbegin();
  for (const Rational& level : levels) {
    if (level <= lo || level >= hi) continue;
    std::size_t orbits = 0;
    for (const GraphNode& node : graph.nodes)
      orbits += std::holds_alternative<IsolatedPoint>(node) && moment_of(node) == level;
    for (const ZkEdge& edge : graph.edges)
      orbits += edge.interval[0] < level && level < edge.interval[1];
    if (orbits > 2)
      report.diagnostics.push_back("level " + to_string(level) + " has " + std::to_string(orbits) +
                                   " non-free orbits");
  }

  report.extendable = report.diagnostics.empty();
  return report;
}

std::string to_dot(const LabeledGraph& graph) {
  std::ostringstream out;
  out << "graph circle_action {\n";
  out << "  rankdir=BT;\n";
  out << "  node [fontname=\"Helvetica\"];\n";

  std::map<Rational, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& node = graph.nodes[i];
    levels[moment_of(node)].push_back(i);
    out << "  n" << i << " [";
    if (const auto* point = std::get_if<IsolatedPoint>(&node)) {
      out << "shape=circle, label=\"moment " << to_string(point->moment) << "\\nweights "
          << point->weights[0].str() << ", " << point->weights[1].str() << "\"";
    } else {
      const auto& surface = std::get<FatVertex>(node);
      out << "shape=box, label=\"moment " << to_string(surface.moment) << "\\narea "
          << to_string(surface.area) << "\\ngenus " << surface.genus << "\"";
    }
    out << "];\n";
  }

  for (const auto& [moment, members] : levels) {
    out << "  { rank=same;";
    for (std::size_t i : members) out << " n" << i << ";";
    out << " }\n";
  }
  for (auto it = levels.begin(); it != levels.end() && std::next(it) != levels.end(); ++it)
    out << "  n" << it->second.front() << " -- n" << std::next(it)->second.front() << " [style=invis];\n";

  for (const ZkEdge& edge : graph.edges)
    out << "  n" << edge.endpoints[0] << " -- n" << edge.endpoints[1] << " [label=\"Z_" << edge.k.str()
        << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace toric
