#include "pdg/datasets.hpp"

#include "pdg/crosspolytope.hpp"
#include "pdg/error.hpp"

namespace pdg {

namespace {

constexpr int kOmegaCoords[8][4] = {
    {-2, 1, 1, 1}, {2, 1, 1, 1},  {0, -2, 1, 1}, {-4, 2, -2, -1},
    {4, 2, -2, -1}, {0, -4, -2, -1}, {0, 0, 2, -1}, {0, 0, -1, 1},
};

constexpr int kOmegaInequalities[10][5] = {
    {0, 4, 2, -1, 5},   {-3, -2, 2, -1, 5}, {3, -2, 2, -1, 5}, {0, 0, 2, 1, 3},   {0, 0, 0, 1, 1},
    {0, 4, -2, 5, 7},   {-3, -2, -2, 5, 7}, {3, -2, -2, 5, 7}, {0, 0, -2, 1, 3},  {0, 0, 0, -1, 1},
};

constexpr int kOmegaPrinted[10][5] = {
    {1, 2, 4, 5, 7}, {1, 3, 4, 6, 7}, {2, 3, 5, 6, 7}, {1, 2, 3, 7, 0}, {1, 2, 3, 8, 0},
    {1, 2, 4, 5, 8}, {1, 3, 4, 6, 8}, {2, 3, 5, 6, 8}, {4, 5, 6, 8, 0}, {4, 5, 6, 7, 0},
};

}  // namespace

std::vector<std::vector<int>> omega_star_printed_facets() {
  std::vector<std::vector<int>> out;
  for (const auto& row : kOmegaPrinted) {
    std::vector<int> f;
    for (int v : row) {
      if (v != 0) f.push_back(v);
    }
    out.push_back(std::move(f));
  }
  return out;
}

Geometry omega_star_geometry() {
  Geometry g;
  for (int v = 0; v < 8; ++v) {
    RationalPoint p;
    for (int k = 0; k < 4; ++k) p.coords.emplace_back(kOmegaCoords[v][k]);
    g.points.push_back(std::move(p));
    g.vertex_names.push_back(std::to_string(v + 1));
  }
  for (int f = 0; f < 10; ++f) {
    Halfspace h;
    for (int k = 0; k < 4; ++k) h.normal.emplace_back(kOmegaInequalities[f][k]);
    h.offset = kOmegaInequalities[f][4];
    g.halfspaces.push_back(std::move(h));
    g.facet_names.push_back("F_" + std::to_string(f + 1));
  }
  return g;
}

VertexFacetIncidence omega_star_incidence() {
  VertexFacetIncidence inc = verify_vh(omega_star_geometry(), "Omega*");
  inc.validate();
  return inc;
}

Dataset omega_star_dataset() {
  return Dataset{"omega-star", omega_star_incidence(), std::nullopt, omega_star_geometry()};
}

Dataset omega_dataset() {
  const FaceLattice dual = polar(FaceLattice::build(omega_star_incidence()));
  VertexFacetIncidence inc = dual.incidence();
  inc.name = "Omega";
  std::vector<Edge> edges;
  for (auto [a, b] : skeleton(dual).edges) edges.emplace_back(a, b);
  return Dataset{"omega", std::move(inc), std::move(edges), std::nullopt};
}

PolytopalDigraph omega_digraph() {
  Dataset ds = omega_dataset();
  return PolytopalDigraph(FaceLattice::build(ds.polytope), *ds.orientation);
}

Dataset simplex_dataset(int d) {
  if (d < 1 || d > 63) throw Error(ErrorKind::InvalidInput, "simplex dimension out of range");
  std::vector<std::vector<int>> facets;
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<int> f;
    for (int v = 0; v <= d; ++v) {
      if (v != omit) f.push_back(v);
    }
    facets.push_back(f);
  }
  VertexFacetIncidence inc = VertexFacetIncidence::from_lists("simplex_" + std::to_string(d), d + 1, facets);
  std::vector<Edge> edges;
  for (int a = 0; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) edges.emplace_back(a, b);
  }
  return Dataset{"simplex-" + std::to_string(d), std::move(inc), std::move(edges), std::nullopt};
}

std::vector<std::string> dataset_names() {
  return {"omega", "omega-star", "simplex-<d>", "cross-<d>", "cube-<d>"};
}

Dataset load_dataset(const std::string& name) {
  if (name == "omega") return omega_dataset();
  if (name == "omega-star" || name == "omega*") return omega_star_dataset();
  auto suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (auto d = suffix("simplex-")) return simplex_dataset(*d);
  if (auto d = suffix("cross-")) return Dataset{name, crosspolytope(*d), std::nullopt, std::nullopt};
  if (auto d = suffix("cube-")) {
    if (*d < 1 || *d > 6) throw Error(ErrorKind::InvalidInput, "cube dimension must be in 1..6");
    Geometry geo = cube_geometry(*d);
    VertexFacetIncidence inc = verify_vh(geo, "cube_" + std::to_string(*d));
    return Dataset{name, std::move(inc), std::nullopt, std::move(geo)};
  }
  throw Error(ErrorKind::InvalidInput, "unknown dataset '" + name + "'");
}

}  // namespace pdg
