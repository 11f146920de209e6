#include "pdg/io.hpp"

#include <fstream>
#include <sstream>

#include "pdg/error.hpp"

namespace pdg {

Json polytope_to_json(const VertexFacetIncidence& inc) {
  Json doc;
  doc["name"] = inc.name;
  doc["vertices"] = inc.vertex_names;
  Json facets = Json::array();
  for (int f = 0; f < inc.num_facets(); ++f) {
    facets.push_back({{"name", inc.facet_names[f]}, {"vertices", inc.facets[f].members()}});
  }
  doc["facets"] = std::move(facets);
  return doc;
}

VertexFacetIncidence polytope_from_json(const Json& doc) {
  try {
    VertexFacetIncidence inc;
    inc.name = doc.value("name", std::string("P"));
    inc.vertex_names = doc.at("vertices").get<std::vector<std::string>>();
    const int n = inc.num_vertices();
    if (n > VertexSet::kCapacity) throw Error(ErrorKind::InvalidInput, "more than 64 vertices");
    int index = 0;
    for (const Json& f : doc.at("facets")) {
      ++index;
      VertexSet s;
      for (int v : f.at("vertices").get<std::vector<int>>()) {
        if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "facet vertex index out of range");
        s.insert(v);
      }
      inc.facets.push_back(s);
      inc.facet_names.push_back(f.value("name", "F_" + std::to_string(index)));
    }
    inc.validate();
    return inc;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("polytope JSON: ") + e.what());
  }
}

Json orientation_to_json(const PolytopalDigraph& g, const std::string& polytope_ref) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"polytope", polytope_ref}, {"edges", std::move(edges)}};
}

OrientationDoc orientation_from_json(const Json& doc) {
  try {
    OrientationDoc out;
    out.polytope = doc.value("polytope", std::string());
    for (const Json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::InvalidInput, "edge must be [tail, head]");
      out.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("orientation JSON: ") + e.what());
  }
}

namespace {

Rational rational_from(const Json& x) {
  if (x.is_number_integer()) return Rational(x.get<long long>());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "rationals must be integers or \"p/q\" strings");
}

}  // namespace

Json geometry_to_json(const Geometry& geometry) {
  Json coords = Json::array();
  for (const RationalPoint& p : geometry.points) {
    Json row = Json::array();
    for (const Rational& x : p.coords) row.push_back(to_string(x));
    coords.push_back(std::move(row));
  }
  Json ineqs = Json::array();
  for (const Halfspace& h : geometry.halfspaces) {
    Json a = Json::array();
    for (const Rational& x : h.normal) a.push_back(to_string(x));
    ineqs.push_back({{"a", std::move(a)}, {"b", to_string(h.offset)}});
  }
  Json doc{{"coordinates", std::move(coords)}, {"inequalities", std::move(ineqs)}};
  if (!geometry.vertex_names.empty()) doc["vertex_names"] = geometry.vertex_names;
  if (!geometry.facet_names.empty()) doc["facet_names"] = geometry.facet_names;
  return doc;
}

Geometry geometry_from_json(const Json& doc) {
  try {
    Geometry g;
    for (const Json& row : doc.at("coordinates")) {
      RationalPoint p;
      for (const Json& x : row) p.coords.push_back(rational_from(x));
      g.points.push_back(std::move(p));
    }
    for (const Json& ineq : doc.at("inequalities")) {
      Halfspace h;
      for (const Json& x : ineq.at("a")) h.normal.push_back(rational_from(x));
      h.offset = rational_from(ineq.at("b"));
      g.halfspaces.push_back(std::move(h));
    }
    if (doc.contains("vertex_names")) g.vertex_names = doc["vertex_names"].get<std::vector<std::string>>();
    if (doc.contains("facet_names")) g.facet_names = doc["facet_names"].get<std::vector<std::string>>();
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("geometry JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

std::string to_dot(const PolytopalDigraph& g) {
  const auto& names = g.lattice().incidence().vertex_names;
  std::ostringstream os;
  os << "digraph \"" << g.lattice().name() << "\" {\n  rankdir=TB;\n";
  for (int v = 0; v < g.num_vertices(); ++v) os << "  v" << v << " [label=\"" << names[v] << "\"];\n";
  for (auto [a, b] : g.edges()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::vector<std::string> names(const PolytopalDigraph& g, const std::vector<int>& order) {
  std::vector<std::string> out;
  for (int v : order) out.push_back(g.lattice().incidence().vertex_names[v]);
  return out;
}

}  // namespace

Json report_to_json(const PolytopalDigraph& g, const PropertyReport& r) {
  const FaceLattice& lat = g.lattice();
  Json doc;
  doc["polytope"] = lat.name();
  doc["dimension"] = lat.dimension();
  doc["vertices"] = lat.num_vertices();
  doc["facets"] = lat.num_facets();
  doc["acyclic"] = r.acyclic;
  doc["uso"] = r.uso;
  doc["holt_klee"] = r.holt_klee;
  doc["shelling"] = r.shelling;
  doc["x_type"] = r.x_type;
  Json witness = Json::object();
  if (!r.acyclic) witness["cycle"] = names(g, r.cycle);
  if (r.uso_witness) witness["uso_face"] = lat.names_of(lat.face(*r.uso_witness).vertices);
  if (!r.holt_klee && !r.holt_klee_detail.uso_failed && r.holt_klee_detail.witness) {
    witness["holt_klee_face"] = lat.names_of(lat.face(*r.holt_klee_detail.witness).vertices);
    witness["holt_klee_paths"] = r.holt_klee_detail.paths;
    witness["holt_klee_required"] = r.holt_klee_detail.required;
  }
  if (r.acyclic) witness["topological_sort"] = names(g, r.checked_order);
  if (r.shelling_witness) {
    const FaceLattice dual = polar(lat);
    const ShellingVerdict& v = *r.shelling_witness;
    witness["shelling_failing_index"] = *v.failing_index;
    witness["shelling_failing_reason"] = std::string(to_string(*v.failing_reason));
    Json pieces = Json::array();
    for (FaceId id : v.failing_intersection) pieces.push_back(dual.names_of(dual.face(id).vertices));
    witness["shelling_intersection"] = std::move(pieces);
  }
  doc["witness"] = std::move(witness);
  return doc;
}

std::string report_to_text(const PolytopalDigraph& g, const PropertyReport& r) {
  const Json doc = report_to_json(g, r);
  const FaceLattice& lat = g.lattice();
  std::ostringstream os;
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  os << lat.name() << ": dimension " << lat.dimension() << ", " << lat.num_vertices() << " vertices, "
     << lat.num_facets() << " facets\n";
  os << "  acyclic    " << mark(r.acyclic) << "\n";
  os << "  USO        " << mark(r.uso) << "\n";
  os << "  Holt-Klee  " << mark(r.holt_klee) << "\n";
  os << "  shelling   " << mark(r.shelling) << "\n";
  os << "  X-type     " << mark(r.x_type) << "\n";
  const Json& w = doc["witness"];
  auto join = [](const Json& list) {
    std::string s;
    for (const auto& x : list) s += (s.empty() ? "" : ",") + x.get<std::string>();
    return s;
  };
  if (w.contains("cycle")) os << "  cycle: " << join(w["cycle"]) << "\n";
  if (w.contains("uso_face")) os << "  face without unique source/sink: {" << join(w["uso_face"]) << "}\n";
  if (w.contains("holt_klee_face"))
    os << "  Holt-Klee fails on {" << join(w["holt_klee_face"]) << "}: " << w["holt_klee_paths"].get<int>()
       << " disjoint paths, need " << w["holt_klee_required"].get<int>() << "\n";
  if (w.contains("topological_sort")) os << "  first topological sort: " << join(w["topological_sort"]) << "\n";
  if (w.contains("shelling_failing_index")) {
    os << "  polar order fails at position " << w["shelling_failing_index"].get<int>() << " ("
       << w["shelling_failing_reason"].get<std::string>() << "); intersection:";
    for (const auto& piece : w["shelling_intersection"]) os << " {" << join(piece) << "}";
    os << "\n";
  }
  return os.str();
}

}  // namespace pdg
