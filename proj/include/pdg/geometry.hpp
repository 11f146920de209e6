#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "pdg/lattice.hpp"

namespace pdg {

using Rational = boost::multiprecision::mpq_rational;

struct RationalPoint {
  std::vector<Rational> coords;
};

/// a . x <= b
struct Halfspace {
  std::vector<Rational> normal;
  Rational offset;
};

struct DirectedLine {
  RationalPoint base;
  std::vector<Rational> direction;
};

/// Coordinates plus facet inequalities, with optional display names.
struct Geometry {
  std::vector<RationalPoint> points;
  std::vector<Halfspace> halfspaces;
  std::vector<std::string> vertex_names;  // defaults to "1".."n"
  std::vector<std::string> facet_names;   // defaults to "F_1".."F_m"
};

using FacetOrder = std::vector<int>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

/// Checks every point against every inequality and returns the equality
/// pattern as an incidence. Throws Error(InfeasiblePoint) on a violated
/// inequality and Error(DimensionMismatch) on inconsistent lengths.
VertexFacetIncidence verify_vh(const Geometry& geometry, const std::string& name = "P");

/// Facets ordered by where the line meets their hyperplanes: positive
/// parameters ascending, then negative parameters ascending (wrapping through
/// infinity). Throws Error(NotInterior) if the base point is not strictly
/// inside and Error(NotGeneric) for a parallel hyperplane or repeated parameter.
FacetOrder line_shelling(const std::vector<Halfspace>& halfspaces, const DirectedLine& line);

/// Line shelling that starts with facets i then j (or, reversed, ends with j then i),
/// for facets sharing a ridge. Throws Error(NotAdjacentFacets) or
/// Error(DegenerateAfterRetries) after `max_retries` halvings of the offsets.
FacetOrder two_facet_start_shelling(const Geometry& geometry, int i, int j, bool reversed = false,
                                    int max_retries = 64);

/// Deterministic generic lines: interior base points from random positive
/// vertex weights and small random integer directions, skipping non-generic ones.
std::vector<DirectedLine> sample_generic_lines(const Geometry& geometry, int count, std::uint64_t seed);

/// Centroid of the listed points.
RationalPoint centroid(const std::vector<RationalPoint>& points, VertexSet which);

/// [-1, 1]^d with facets x_i <= 1 then -x_i <= 1 interleaved.
Geometry cube_geometry(int d);

}  // namespace pdg
