#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/geometry.hpp"
#include "pdg/lattice.hpp"

namespace pdg {

struct Dataset {
  std::string name;
  VertexFacetIncidence polytope;
  std::optional<std::vector<Edge>> orientation;
  std::optional<Geometry> geometry;
};

/// Vertices 1..8 and facets F_1..F_10 of the 4-polytope Omega*, with exact
/// coordinates and facet inequalities.
Geometry omega_star_geometry();
VertexFacetIncidence omega_star_incidence();
/// The "vertices" column of the facet table as printed: 1-based vertex labels per facet.
std::vector<std::vector<int>> omega_star_printed_facets();

/// Omega, the combinatorial polar of Omega*: vertices F_1..F_10, facets 1..8,
/// every edge directed from the smaller to the larger index.
Dataset omega_dataset();
Dataset omega_star_dataset();
PolytopalDigraph omega_digraph();

/// d-simplex with the orientation of increasing vertex index.
Dataset simplex_dataset(int d);

/// Built-in names: omega, omega-star, simplex-<d>, cross-<d>, cube-<d>.
std::vector<std::string> dataset_names();
/// Throws Error(InvalidInput) for an unknown name.
Dataset load_dataset(const std::string& name);

}  // namespace pdg
