#include "toric/json_io.hpp"

#include <limits>

namespace toric::json_io {

namespace {

[[noreturn]] void bad(const std::string& detail) { throw Error(ErrorCode::InvalidJson, detail); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& pair_array(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be an array of two entries");
  return j;
}

std::int64_t small_integer(const Json& j, const char* what) {
  const BigInt value = integer_from_json(j);
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    bad(std::string(what) + " out of range");
  return static_cast<std::int64_t>(value);
}

} // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Json to_json(const IntVec2& v) { return Json::array({to_json(v.x()), to_json(v.y())}); }

Json to_json(const RatVec2& v) { return Json::array({to_json(v.x()), to_json(v.y())}); }

Json to_json(const IntMat2& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const UnimodularAffine& map) {
  return {{"linear", to_json(map.linear())}, {"translation", to_json(map.translation())}};
}

Json to_json(const Polygon& polygon) {
  Json vertices = Json::array();
  for (const RatVec2& v : polygon.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", std::move(vertices)}};
}

Json to_json(const DelzantReport& report) {
  Json normals = Json::array();
  for (const IntVec2& u : report.normals) normals.push_back(to_json(u));
  Json failures = Json::array();
  for (const DelzantFailure& f : report.failures)
    failures.push_back({{"pair", f.pair_index}, {"det", to_json(f.determinant)}});
  return {{"is_delzant", report.is_delzant},
          {"normals", std::move(normals)},
          {"failures", std::move(failures)},
          {"reversed_input", report.reversed_input}};
}

Json to_json(const HirzebruchParams& params) {
  return {{"a", to_json(params.a)}, {"b", to_json(params.b)}, {"m", to_json(params.m)}};
}

Json to_json(const QuadrilateralClass& result) {
  return {{"params", to_json(result.params)}, {"witness", to_json(result.witness)}};
}

Json to_json(const ManifoldClass& manifold) {
  if (manifold.is_sphere_product()) {
    const auto& s = manifold.as_sphere_product();
    return {{"type", "s2xs2"}, {"a", to_json(s.a)}, {"b", to_json(s.b)}};
  }
  const auto& c = manifold.as_blow_up();
  return {{"type", "blowup_cp2"}, {"l", to_json(c.l)}, {"e", to_json(c.e)}};
}

Json to_json(const LabeledGraph& graph) {
  Json nodes = Json::array();
  for (const GraphNode& node : graph.nodes) {
    if (const auto* point = std::get_if<IsolatedPoint>(&node)) {
      nodes.push_back({{"type", "isolated"},
                       {"moment", to_json(point->moment)},
                       {"weights", Json::array({to_json(point->weights[0]), to_json(point->weights[1])})}});
    } else {
      const auto& surface = std::get<FatVertex>(node);
      nodes.push_back({{"type", "surface"},
                       {"moment", to_json(surface.moment)},
                       {"area", to_json(surface.area)},
                       {"genus", surface.genus}});
    }
  }
  Json edges = Json::array();
  for (const ZkEdge& edge : graph.edges)
    edges.push_back({{"k", to_json(edge.k)},
                     {"endpoints", Json::array({edge.endpoints[0], edge.endpoints[1]})},
                     {"interval", Json::array({to_json(edge.interval[0]), to_json(edge.interval[1])})}});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json to_json(const FixedPointData& data) {
  Json components = Json::array();
  for (const FixedComponent& component : data.components) {
    if (const auto* point = std::get_if<IsolatedFixed>(&component)) {
      components.push_back({{"type", "isolated"}, {"index", point->index}});
    } else {
      const auto& surface = std::get<SurfaceFixed>(component);
      components.push_back({{"type", "surface"}, {"index", surface.index}, {"genus", surface.genus}});
    }
  }
  return {{"components", std::move(components)}};
}

Json to_json(const BettiNumbers& betti) {
  Json out = Json::array();
  for (std::int64_t b : betti) out.push_back(b);
  return out;
}

Json to_json(const ExtendabilityReport& report) {
  return {{"extendable", report.extendable}, {"diagnostics", report.diagnostics}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw Error(ErrorCode::InvalidRational, "rational must be a string like \"5/2\", got " + j.dump());
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad("expected an integer, got " + j.dump());
}

IntVec2 int_vec_from_json(const Json& j) {
  pair_array(j, "integer vector");
  return IntVec2(integer_from_json(j[0]), integer_from_json(j[1]));
}

RatVec2 rat_vec_from_json(const Json& j) {
  pair_array(j, "point");
  return RatVec2(rational_from_json(j[0]), rational_from_json(j[1]));
}

IntMat2 int_mat_from_json(const Json& j) {
  pair_array(j, "matrix");
  IntMat2 m;
  for (int r = 0; r < 2; ++r) {
    pair_array(j[r], "matrix row");
    for (int c = 0; c < 2; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

UnimodularAffine affine_from_json(const Json& j) {
  return UnimodularAffine(int_mat_from_json(field(j, "linear")), rat_vec_from_json(field(j, "translation")));
}

Polygon polygon_from_json(const Json& j) {
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) bad("\"vertices\" must be an array");
  std::vector<RatVec2> points;
  for (const Json& v : vertices) points.push_back(rat_vec_from_json(v));
  return make_polygon(std::move(points));
}

HirzebruchParams params_from_json(const Json& j) {
  HirzebruchParams params{rational_from_json(field(j, "a")), rational_from_json(field(j, "b")),
                          integer_from_json(field(j, "m"))};
  validate(params);
  return params;
}

ManifoldClass manifold_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (type == "s2xs2")
    return ManifoldClass::sphere_product(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")));
  if (type == "blowup_cp2")
    return ManifoldClass::blow_up(rational_from_json(field(j, "l")), rational_from_json(field(j, "e")));
  throw Error(ErrorCode::InvalidManifold, "unknown manifold type " + type.dump());
}

LabeledGraph graph_from_json(const Json& j) {
  LabeledGraph graph;
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("\"nodes\" must be an array");
  for (const Json& node : nodes) {
    const Json& type = field(node, "type");
    if (type == "isolated") {
      const Json& w = pair_array(field(node, "weights"), "weights");
      std::array<BigInt, 2> weights{integer_from_json(w[0]), integer_from_json(w[1])};
      if (weights[0] > weights[1]) std::swap(weights[0], weights[1]);
      graph.nodes.emplace_back(IsolatedPoint{rational_from_json(field(node, "moment")), std::move(weights)});
    } else if (type == "surface") {
      const std::int64_t genus = node.contains("genus") ? small_integer(node["genus"], "genus") : 0;
      graph.nodes.emplace_back(
          FatVertex{rational_from_json(field(node, "moment")), rational_from_json(field(node, "area")), genus});
    } else {
      bad("unknown node type " + type.dump());
    }
  }

  const auto edges_it = j.find("edges");
  if (edges_it != j.end()) {
    if (!edges_it->is_array()) bad("\"edges\" must be an array");
    for (const Json& edge : *edges_it) {
      const Json& ends = pair_array(field(edge, "endpoints"), "endpoints");
      std::array<std::size_t, 2> endpoints{};
      for (int i = 0; i < 2; ++i) {
        const std::int64_t index = small_integer(ends[i], "endpoint");
        if (index < 0 || static_cast<std::size_t>(index) >= graph.nodes.size())
          throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
        endpoints[i] = static_cast<std::size_t>(index);
      }
      if (moment_of(graph.nodes[endpoints[1]]) < moment_of(graph.nodes[endpoints[0]]))
        std::swap(endpoints[0], endpoints[1]);
      std::array<Rational, 2> interval{moment_of(graph.nodes[endpoints[0]]), moment_of(graph.nodes[endpoints[1]])};
      if (edge.contains("interval")) {
        const Json& given = pair_array(edge["interval"], "interval");
        if (rational_from_json(given[0]) != interval[0] || rational_from_json(given[1]) != interval[1])
          throw Error(ErrorCode::InvalidGraph, "edge interval does not match endpoint moments");
      }
      graph.edges.push_back(ZkEdge{integer_from_json(field(edge, "k")), endpoints, std::move(interval)});
    }
  }
  validate(graph);
  return graph;
}

FixedPointData fixed_data_from_json(const Json& j) {
  const Json& components = j.is_array() ? j : field(j, "components");
  if (!components.is_array()) bad("\"components\" must be an array");
  FixedPointData data;
  for (const Json& c : components) {
    const Json& type = field(c, "type");
    const auto index = static_cast<int>(small_integer(field(c, "index"), "index"));
    if (type == "isolated") {
      data.components.emplace_back(IsolatedFixed{index});
    } else if (type == "surface") {
      const std::int64_t genus = c.contains("genus") ? small_integer(c["genus"], "genus") : 0;
      data.components.emplace_back(SurfaceFixed{index, genus});
    } else {
      bad("unknown component type " + type.dump());
    }
  }
  validate(data);
  return data;
}

} // namespace toric::json_io
