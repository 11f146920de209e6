#include <doctest.h>

#include "pdg/datasets.hpp"
#include "pdg/geometry.hpp"
#include "pdg/shelling.hpp"
#include "errors.hpp"
#include "support.hpp"

using namespace pdg;

namespace {

using oracle::Rational;

DirectedLine line(std::vector<Rational> base, std::vector<Rational> dir) {
  return DirectedLine{RationalPoint{std::move(base)}, std::move(dir)};
}

// Hyperplane crossings sorted by hand: positive parameters, then negative ones.
std::vector<int> crossing_order(const std::vector<Halfspace>& hs, const DirectedLine& l) {
  std::vector<std::pair<Rational, int>> pos, neg;
  for (std::size_t f = 0; f < hs.size(); ++f) {
    const Rational t = (hs[f].offset - oracle::dot(hs[f].normal, l.base.coords)) / oracle::dot(hs[f].normal, l.direction);
    (t > 0 ? pos : neg).emplace_back(t, static_cast<int>(f));
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<int> out;
  for (auto& p : pos) out.push_back(p.second);
  for (auto& p : neg) out.push_back(p.second);
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational(" -0/5 ") == 0);
  CHECK(to_string(parse_rational("-6/8")) == "-3/4");
  CHECK(kind_of([] { parse_rational("abc"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational("1/2/3"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("Omega* coordinates reproduce the printed facet table") {
  const Geometry g = omega_star_geometry();
  CHECK(g.points.size() == 8);
  CHECK(g.halfspaces.size() == 10);
  const VertexFacetIncidence inc = verify_vh(g);
  const auto printed = omega_star_printed_facets();
  REQUIRE(printed.size() == 10);
  for (int f = 0; f < 10; ++f) {
    CAPTURE(f);
    VertexSet expected;
    for (int v : printed[f]) expected.insert(v - 1);
    CHECK(inc.facets[f] == expected);
  }
  CHECK(same_incidence(inc, omega_star_incidence()));
}

TEST_CASE("vertex 8 of Omega* lies on F_5 through F_9 only") {
  const VertexFacetIncidence inc = verify_vh(omega_star_geometry());
  std::vector<std::string> on;
  for (int f = 0; f < inc.num_facets(); ++f) {
    if (inc.facets[f].contains(7)) on.push_back(inc.facet_names[f]);
  }
  CHECK(on == std::vector<std::string>{"F_5", "F_6", "F_7", "F_8", "F_9"});
}

TEST_CASE("verify_vh on a square and its failures") {
  const Geometry sq = cube_geometry(2);
  const VertexFacetIncidence inc = verify_vh(sq);
  CHECK(inc.num_vertices() == 4);
  CHECK(inc.num_facets() == 4);
  for (const VertexSet& f : inc.facets) CHECK(f.size() == 2);
  Geometry outside = sq;
  outside.points[0].coords[0] = 2;
  CHECK(kind_of([&] { verify_vh(outside); }) == ErrorKind::InfeasiblePoint);
  Geometry short_point = sq;
  short_point.points[1].coords.pop_back();
  CHECK(kind_of([&] { verify_vh(short_point); }) == ErrorKind::DimensionMismatch);
  Geometry long_normal = sq;
  long_normal.halfspaces[2].normal.push_back(0);
  CHECK(kind_of([&] { verify_vh(long_normal); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("line shelling of the square wraps through infinity") {
  const Geometry sq = cube_geometry(2);
  const DirectedLine l = line({0, 0}, {1, 2});
  CHECK(line_shelling(sq.halfspaces, l) == std::vector<int>{2, 0, 1, 3});
  CHECK(line_shelling(sq.halfspaces, l) == crossing_order(sq.halfspaces, l));
  CHECK(kind_of([&] { line_shelling(sq.halfspaces, line({0, 0}, {1, 1})); }) == ErrorKind::NotGeneric);
  CHECK(kind_of([&] { line_shelling(sq.halfspaces, line({0, 0}, {0, 1})); }) == ErrorKind::NotGeneric);
  CHECK(kind_of([&] { line_shelling(sq.halfspaces, line({1, 0}, {1, 2})); }) == ErrorKind::NotInterior);
  CHECK(kind_of([&] { line_shelling(sq.halfspaces, line({2, 0}, {1, 2})); }) == ErrorKind::NotInterior);
}

TEST_CASE("sampled lines are generic, deterministic and give shellings") {
  for (const std::string name : {"omega-star", "cube-4", "cube-3"}) {
    CAPTURE(name);
    const Dataset ds = load_dataset(name);
    REQUIRE(ds.geometry.has_value());
    const FaceLattice lat = FaceLattice::build(ds.polytope);
    const auto lines = sample_generic_lines(*ds.geometry, 25, 5);
    CHECK(lines.size() == 25);
    const auto again = sample_generic_lines(*ds.geometry, 25, 5);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const FacetOrder order = line_shelling(ds.geometry->halfspaces, lines[i]);
      CHECK(order == line_shelling(ds.geometry->halfspaces, again[i]));
      CHECK(order == crossing_order(ds.geometry->halfspaces, lines[i]));
      CHECK(is_shelling(lat, order).is_shelling);
      if (lat.dimension() == 4) CHECK(oracle::is_shelling_4d(lat, order));
      if (lat.dimension() == 3) CHECK(oracle::is_shelling_3d(lat, order));
    }
  }
}

TEST_CASE("two-facet starts and ends") {
  for (const std::string name : {"omega-star", "cube-4"}) {
    CAPTURE(name);
    const Dataset ds = load_dataset(name);
    const Geometry& g = *ds.geometry;
    const FaceLattice lat = FaceLattice::build(ds.polytope);
    int pairs = 0;
    for (int i = 0; i < lat.num_facets(); ++i) {
      for (int j = 0; j < lat.num_facets(); ++j) {
        if (i == j) continue;
        const VertexSet common = lat.incidence().facets[i] & lat.incidence().facets[j];
        const auto ridge = lat.find(common);
        if (!ridge || lat.face(*ridge).dimension != 2) continue;
        ++pairs;
        const FacetOrder fwd = two_facet_start_shelling(g, i, j);
        CHECK(fwd[0] == i);
        CHECK(fwd[1] == j);
        CHECK(oracle::is_shelling_4d(lat, fwd));
        const FacetOrder back = two_facet_start_shelling(g, i, j, true);
        CHECK(back[back.size() - 2] == j);
        CHECK(back.back() == i);
        CHECK(oracle::is_shelling_4d(lat, back));
      }
    }
    CHECK(pairs > 0);
  }
}

TEST_CASE("two-facet start needs a common ridge") {
  const Geometry cube = cube_geometry(4);
  CHECK(kind_of([&] { two_facet_start_shelling(cube, 0, 1); }) == ErrorKind::NotAdjacentFacets);
  CHECK(kind_of([&] { two_facet_start_shelling(cube, 0, 0); }) == ErrorKind::NotAdjacentFacets);
  CHECK(kind_of([&] { two_facet_start_shelling(cube, 0, 99); }) == ErrorKind::InvalidInput);
}

TEST_CASE("centroid") {
  const Geometry sq = cube_geometry(2);
  const RationalPoint c = centroid(sq.points, VertexSet::range(4));
  CHECK(c.coords == std::vector<Rational>{0, 0});
}
