#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pdg/classify.hpp"
#include "pdg/digraph.hpp"
#include "pdg/geometry.hpp"
#include "pdg/lattice.hpp"

namespace pdg {

using Json = nlohmann::ordered_json;

// {"name": s, "vertices": [s], "facets": [{"name": s, "vertices": [int]}]}, 0-based.
Json polytope_to_json(const VertexFacetIncidence& inc);
VertexFacetIncidence polytope_from_json(const Json& doc);

// {"polytope": s, "edges": [[tail, head]]}, 0-based.
Json orientation_to_json(const PolytopalDigraph& g, const std::string& polytope_ref);
struct OrientationDoc {
  std::string polytope;
  std::vector<Edge> edges;
};
OrientationDoc orientation_from_json(const Json& doc);

// {"coordinates": [["p/q", ...]], "inequalities": [{"a": [...], "b": "p/q"}]};
// optional "vertex_names" and "facet_names".
Json geometry_to_json(const Geometry& geometry);
Geometry geometry_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

/// Graphviz rendering with vertex names, top-to-bottom in edge direction.
std::string to_dot(const PolytopalDigraph& g);

Json report_to_json(const PolytopalDigraph& g, const PropertyReport& report);
/// Multi-line human-readable report.
std::string report_to_text(const PolytopalDigraph& g, const PropertyReport& report);

}  // namespace pdg
