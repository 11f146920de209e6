#include <doctest.h>

#include <numeric>
#include <random>

#include "pdg/claims.hpp"
#include "pdg/crosspolytope.hpp"
#include "pdg/datasets.hpp"
#include "pdg/shelling.hpp"
#include "errors.hpp"
#include "support.hpp"

using namespace pdg;

namespace {

std::vector<std::string> pieces(const FaceLattice& lat, const std::vector<FaceId>& ids) {
  std::vector<std::string> out;
  for (FaceId id : ids) out.push_back(lat.describe(lat.face(id).vertices));
  return out;
}

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("Omega* in index order fails at F_3 with two 2-faces meeting in a vertex") {
  const FaceLattice star = FaceLattice::build(omega_star_incidence());
  const ShellingVerdict v = is_shelling(star, identity(10));
  CHECK_FALSE(v.is_shelling);
  REQUIRE(v.failing_index.has_value());
  CHECK(*v.failing_index == 3);
  CHECK(*v.failing_reason == ShellingFailure::NotBeginningSegment);
  CHECK(pieces(star, v.failing_intersection) == std::vector<std::string>{"{2,5,7}", "{3,6,7}"});
  CHECK(pieces(star, boundary_intersection(star, identity(10), 3)) == std::vector<std::string>{"{2,5,7}", "{3,6,7}"});
  CHECK(boundary_intersection(star, identity(10), 1).empty());
  CHECK(pieces(star, boundary_intersection(star, identity(10), 2)) == std::vector<std::string>{"{1,4,7}"});
}

TEST_CASE("polygon orders") {
  const auto square = VertexFacetIncidence::from_lists("square", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const FaceLattice lat = FaceLattice::build(square);
  CHECK(is_shelling(lat, std::vector<int>{0, 1, 2, 3}).is_shelling);
  CHECK(is_shelling(lat, std::vector<int>{0, 3, 1, 2}).is_shelling);
  const ShellingVerdict v = is_shelling(lat, std::vector<int>{0, 2, 1, 3});
  CHECK_FALSE(v.is_shelling);
  CHECK(*v.failing_index == 2);
  CHECK(*v.failing_reason == ShellingFailure::EmptyIntersection);
  CHECK(kind_of([&] { is_shelling(lat, std::vector<int>{0, 1, 1, 3}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { is_shelling(lat, std::vector<int>{0, 1, 2}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("impure intersection is reported as not codimension one") {
  // the second facet of the octahedron touches the first only in a vertex
  const FaceLattice oct = FaceLattice::build(crosspolytope(3));
  const auto& inc = oct.incidence();
  const int a = inc.facet_index("[+++]");
  const int b = inc.facet_index("[+--]");
  std::vector<int> order{a, b};
  for (int f = 0; f < inc.num_facets(); ++f) {
    if (f != a && f != b) order.push_back(f);
  }
  const ShellingVerdict v = is_shelling(oct, order);
  CHECK_FALSE(v.is_shelling);
  CHECK(*v.failing_index == 2);
  CHECK(*v.failing_reason == ShellingFailure::NotPureCodimOne);
}

TEST_CASE("3-polytope shellings agree with the path criterion on every order") {
  for (const std::string name : {"cube-3", "cross-3"}) {
    CAPTURE(name);
    const FaceLattice lat = FaceLattice::build(load_dataset(name).polytope);
    std::vector<int> order = identity(lat.num_facets());
    int shellings = 0;
    do {
      const bool mine = is_shelling(lat, order).is_shelling;
      CHECK(mine == oracle::is_shelling_3d(lat, order));
      shellings += mine ? 1 : 0;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(shellings > 0);
  }
}

TEST_CASE("4-polytope shellings agree with the disk criterion on random orders") {
  std::mt19937_64 rng(2024);
  for (const std::string name : {"omega-star", "cube-4"}) {
    CAPTURE(name);
    const FaceLattice lat = FaceLattice::build(load_dataset(name).polytope);
    std::vector<int> order = identity(lat.num_facets());
    int agree = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const bool mine = is_shelling(lat, order).is_shelling;
      const bool ref = oracle::is_shelling_4d(lat, order);
      CHECK(mine == ref);
      agree += mine == ref ? 1 : 0;
    }
    CHECK(agree == 3000);
  }
}

TEST_CASE("the full boundary of every facet is a beginning segment") {
  for (const std::string name : {"omega-star", "omega", "cube-4", "cross-4", "simplex-4", "cross-3"}) {
    CAPTURE(name);
    const FaceLattice lat = FaceLattice::build(load_dataset(name).polytope);
    for (FaceId f : lat.faces_of_dimension(lat.dimension() - 1)) {
      const FaceLattice facet = faces_of(lat, f);
      std::vector<VertexSet> ridges;
      for (FaceId r : facet.faces_of_dimension(facet.dimension() - 1)) ridges.push_back(facet.face(r).vertices);
      CHECK(is_beginning_segment(facet, ridges));
    }
  }
}

TEST_CASE("beginning segments of a 3-cube facet boundary") {
  const FaceLattice cube = FaceLattice::build(load_dataset("cube-3").polytope);
  const FaceLattice square = faces_of(cube, cube.facet_face(0));
  std::vector<VertexSet> edges;
  for (FaceId e : square.faces_of_dimension(1)) edges.push_back(square.face(e).vertices);
  REQUIRE(edges.size() == 4);
  // two opposite edges of a square are not a path
  std::vector<VertexSet> opposite;
  for (VertexSet e : edges) {
    if ((e & edges[0]).empty()) opposite.push_back(e);
  }
  REQUIRE(opposite.size() == 1);
  const std::vector<VertexSet> split{edges[0], opposite[0]};
  CHECK_FALSE(is_beginning_segment(square, split));
  const std::vector<VertexSet> one{edges[0]};
  CHECK(is_beginning_segment(square, one));
}

TEST_CASE("shelling property on small digraphs") {
  const Dataset ds = simplex_dataset(4);
  const PolytopalDigraph g(FaceLattice::build(ds.polytope), *ds.orientation);
  CHECK(shelling_property_exists(g));
  CHECK(shelling_property_all(g, true).holds);
  const PolytopalDigraph omega = omega_digraph();
  CHECK_FALSE(shelling_property_exists(omega));
  const ShellingAllResult all = shelling_property_all(omega, true);
  CHECK_FALSE(all.holds);
  CHECK(all.orders_checked == 1);
  CHECK(omega.lattice().names_of(VertexSet::from(all.counterexample)) ==
        std::vector<std::string>{"F_1", "F_2", "F_3"});
}

TEST_CASE("existence and universality agree over the corpus") {
  for (const CorpusEntry& e : equivalence_corpus()) {
    CAPTURE(e.name);
    if (!is_acyclic(e.digraph).acyclic) continue;
    CHECK(shelling_property_exists(e.digraph) == shelling_property_all(e.digraph, true).holds);
  }
}

TEST_CASE("audit sweep beyond the enumeration cap agrees with explicit enumeration") {
  auto cube = std::make_shared<const FaceLattice>(FaceLattice::build(load_dataset("cube-3").polytope));
  std::mt19937_64 rng(99);
  int compared = 0, holding = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> rank(8);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    const PolytopalDigraph g = ranked_orientation(cube, rank);
    if (count_topological_sorts(g, 5) <= 5) continue;
    const ShellingAllResult explicit_run = shelling_property_all(g, true, 1'000'000);
    const ShellingAllResult sweep = shelling_property_all(g, true, 5);
    CHECK(explicit_run.enumerated);
    CHECK_FALSE(sweep.enumerated);
    CHECK(explicit_run.holds == sweep.holds);
    ++compared;
    holding += explicit_run.holds ? 1 : 0;
  }
  CHECK(compared > 0);
  CHECK(holding > 0);
  CHECK(holding < compared);
}

TEST_CASE("every topological sort of a good crosspolytope orientation shells the polar, brute force") {
  auto lat = crosspolytope_lattice(3);
  const FaceLattice cube = polar(*lat);
  for_each_pair_sequence(3, [&](const PairSequence& s) {
    const PolytopalDigraph g = to_digraph(orientation_of(s), lat);
    bool all = true, any = false;
    for (const auto& order : oracle::linear_extensions(6, g.edges())) {
      const bool ok = oracle::is_shelling_3d(cube, order);
      all = all && ok;
      any = any || ok;
    }
    CHECK(all == any);
    CHECK(shelling_property_exists(g) == any);
    CHECK(is_good(s) == any);
  });
}

TEST_CASE("boundary formula on acyclic USOs") {
  for (int d = 2; d <= 4; ++d) {
    auto lat = crosspolytope_lattice(d);
    for_each_pair_sequence(d, [&](const PairSequence& s) {
      if (!has_unique_source(s) || !has_unique_sink(s)) return;
      CHECK(boundary_formula_check(to_digraph(orientation_of(s), lat), 100).holds);
    });
  }
  const Dataset ds = simplex_dataset(4);
  CHECK(boundary_formula_check(PolytopalDigraph(FaceLattice::build(ds.polytope), *ds.orientation), 10).holds);
}

TEST_CASE("boundary formula requires an acyclic USO") {
  CHECK(kind_of([] { boundary_formula_check(omega_digraph()); }) == ErrorKind::NotAcyclicUSO);
  auto lat = crosspolytope_lattice(2);
  const PolytopalDigraph two_sources = to_digraph(orientation_of(PairSequence::parse("(12)(34)")), lat);
  CHECK(kind_of([&] { boundary_formula_check(two_sources); }) == ErrorKind::NotAcyclicUSO);
}
