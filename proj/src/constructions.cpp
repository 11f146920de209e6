#include "pdg/constructions.hpp"

#include <algorithm>

#include "pdg/error.hpp"

namespace pdg {

std::optional<int> unique_sink(const PolytopalDigraph& g) {
  std::optional<int> sink;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!g.out_neighbors(v).empty()) continue;
    if (sink) return std::nullopt;
    sink = v;
  }
  return sink;
}

namespace {

VertexSet neighbours(const PolytopalDigraph& g, int v) { return g.out_neighbors(v) | g.in_neighbors(v); }

void require_truncatable(const PolytopalDigraph& g, int v) {
  const FaceLattice& lat = g.lattice();
  if (lat.dimension() != 4)
    throw Error(ErrorKind::NotDimensionFour,
                lat.name() + " has dimension " + std::to_string(lat.dimension()));
  if (v < 0 || v >= g.num_vertices()) throw Error(ErrorKind::InvalidInput, "vertex out of range");
  const std::string& name = lat.incidence().vertex_names[v];
  if (lat.face(lat.vertex_face(v)).containing_facets.size() != 4 || neighbours(g, v).size() != 4)
    throw Error(ErrorKind::NotSimpleVertex, name + " is not a simple vertex");
  if (!is_acyclic(g).acyclic) throw Error(ErrorKind::CyclicInput, "digraph has a directed cycle");
  const auto sink = unique_sink(g);
  if (!sink || *sink != v) throw Error(ErrorKind::NotUniqueSink, name + " is not the unique sink");
}

std::string fresh_name(const VertexFacetIncidence& inc, std::string base) {
  while (inc.vertex_index(base) >= 0 || inc.facet_index(base) >= 0) base += "'";
  return base;
}

}  // namespace

std::vector<std::array<int, 4>> admissible_splits(const PolytopalDigraph& g, int vertex) {
  require_truncatable(g, vertex);
  std::array<int, 4> nb{};
  const auto members = neighbours(g, vertex).members();
  std::copy(members.begin(), members.end(), nb.begin());
  std::vector<std::array<int, 4>> out;
  do {
    if (!g.has_path(nb[3], nb[2])) out.push_back(nb);
  } while (std::next_permutation(nb.begin(), nb.end()));
  return out;
}

TruncationResult truncate(const PolytopalDigraph& g, const TruncationSpec& spec) {
  const int v = spec.vertex;
  require_truncatable(g, v);
  const FaceLattice& lat = g.lattice();
  const VertexFacetIncidence& in = lat.incidence();
  const VertexSet nb = neighbours(g, v);

  std::array<int, 4> split{};
  if (spec.split) {
    split = *spec.split;
    VertexSet given;
    for (int w : split) given.insert(w);
    if (given != nb || given.size() != 4)
      throw Error(ErrorKind::BadSplit, "split is not a permutation of the neighbours of " +
                                           in.vertex_names[v]);
    if (g.has_path(split[3], split[2]))
      throw Error(ErrorKind::BadSplit, "directed path from v_4 = " + in.vertex_names[split[3]] +
                                           " to v_3 = " + in.vertex_names[split[2]]);
  } else {
    const auto all = admissible_splits(g, v);
    if (all.empty()) throw Error(ErrorKind::BadSplit, "no admissible split");
    split = all.front();
  }

  // Facet at v omitting neighbour v_i plays the role F_{m+i}.
  std::array<int, 4> role{-1, -1, -1, -1};
  for (int f = 0; f < in.num_facets(); ++f) {
    if (!in.facets[f].contains(v)) continue;
    const VertexSet missing = nb - in.facets[f];
    if (missing.size() != 1)
      throw Error(ErrorKind::NotSimpleVertex,
                  "facet " + in.facet_names[f] + " does not omit exactly one neighbour of " +
                      in.vertex_names[v]);
    const int i = static_cast<int>(std::find(split.begin(), split.end(), missing.first()) - split.begin());
    if (role[i] >= 0)
      throw Error(ErrorKind::NotSimpleVertex, "two facets omit the same neighbour of " + in.vertex_names[v]);
    role[i] = f;
  }

  // Renumber: drop v, keep the order of the others, append u_1 and u_2.
  const int n = in.num_vertices();
  std::vector<int> renum(n, -1);
  VertexFacetIncidence out;
  out.name = "tr(" + in.name + ")";
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    renum[w] = static_cast<int>(out.vertex_names.size());
    out.vertex_names.push_back(in.vertex_names[w]);
  }
  const int u1 = static_cast<int>(out.vertex_names.size());
  const int u2 = u1 + 1;
  out.vertex_names.push_back(fresh_name(in, "u1[" + in.vertex_names[v] + "]"));
  out.vertex_names.push_back(fresh_name(in, "u2[" + in.vertex_names[v] + "]"));
  if (out.vertex_names.size() > static_cast<std::size_t>(VertexSet::kCapacity))
    throw Error(ErrorKind::InvalidInput, "too many vertices");

  auto relabel = [&](VertexSet s) {
    VertexSet r;
    s.for_each([&](int w) {
      if (w != v) r.insert(renum[w]);
    });
    return r;
  };
  const int v1 = renum[split[0]], v2 = renum[split[1]], v3 = renum[split[2]], v4 = renum[split[3]];
  const std::array<VertexSet, 4> added{
      VertexSet::of({u2, v2, v3, v4}),
      VertexSet::of({u1, v1, v3, v4}),
      VertexSet::of({u1, u2, v1, v2, v4}),
      VertexSet::of({u1, u2, v1, v2, v3}),
  };
  for (int f = 0; f < in.num_facets(); ++f) {
    VertexSet facet = relabel(in.facets[f]);
    for (int i = 0; i < 4; ++i) {
      if (role[i] == f) facet |= added[i];
    }
    out.facets.push_back(facet);
    out.facet_names.push_back(in.facet_names[f]);
  }
  out.facets.push_back(VertexSet::of({u1, u2, v3, v4}));
  out.facet_names.push_back(fresh_name(in, "H[" + in.vertex_names[v] + "]"));

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(renum[a], renum[b]);
  }
  if (!g.has_edge(split[2], split[3]) && !g.has_edge(split[3], split[2])) edges.emplace_back(v3, v4);
  for (Edge e : {Edge{v1, u1}, Edge{v3, u1}, Edge{v4, u1}, Edge{v2, u2}, Edge{v3, u2}, Edge{v4, u2},
                 Edge{u1, u2}})
    edges.push_back(e);

  PolytopalDigraph result(FaceLattice::build(out), std::move(edges));
  if (result.lattice().dimension() != 4)
    throw Error(ErrorKind::NotALattice, "truncation did not produce a 4-polytope");
  return TruncationResult{std::move(result), split, u1, u2};
}

PolytopalDigraph pyramid(const PolytopalDigraph& g) {
  const VertexFacetIncidence& in = g.lattice().incidence();
  const int d = g.lattice().dimension();
  if (in.num_vertices() + 1 > VertexSet::kCapacity || in.num_facets() + 1 > VertexSet::kCapacity)
    throw Error(ErrorKind::InvalidInput, "too many vertices or facets for a pyramid");
  VertexFacetIncidence out;
  out.name = "py(" + in.name + ")";
  out.vertex_names = in.vertex_names;
  const int apex = in.num_vertices();
  out.vertex_names.push_back(fresh_name(in, "apex_" + std::to_string(d + 1)));
  for (int f = 0; f < in.num_facets(); ++f) {
    VertexSet facet = in.facets[f];
    facet.insert(apex);
    out.facets.push_back(facet);
    out.facet_names.push_back(in.facet_names[f]);
  }
  out.facets.push_back(VertexSet::range(apex));
  out.facet_names.push_back(fresh_name(in, "base_" + std::to_string(d + 1)));

  std::vector<Edge> edges = g.edges();
  for (int w = 0; w < apex; ++w) edges.emplace_back(w, apex);
  return PolytopalDigraph(FaceLattice::build(out), std::move(edges));
}

FamilyResult family(const PolytopalDigraph& base, const FamilySpec& spec) {
  const int n0 = base.num_vertices();
  const int d = spec.dimension;
  const int n = spec.vertices;
  if (d < 4 || n < n0 + d - 4)
    throw Error(ErrorKind::BoundsViolation,
                "need d >= 4 and n >= n_0 + d - 4 = " + std::to_string(n0 + d - 4) + ", got d = " +
                    std::to_string(d) + ", n = " + std::to_string(n));
  if (base.lattice().dimension() != 4)
    throw Error(ErrorKind::NotDimensionFour, "family base must be a 4-polytope");

  FamilyResult result{base, {}};
  for (int t = 0; t < n - n0 - d + 4; ++t) {
    const auto sink = unique_sink(result.digraph);
    if (!sink) throw Error(ErrorKind::NotUniqueSink, "digraph has no unique sink");
    TruncationResult tr = truncate(result.digraph, TruncationSpec{*sink, std::nullopt});
    const auto& names = result.digraph.lattice().incidence().vertex_names;
    FamilyStep step{"truncate", tr.digraph.num_vertices(), tr.digraph.lattice().num_facets(), 4,
                    std::array<std::string, 5>{names[*sink], names[tr.split[0]], names[tr.split[1]],
                                               names[tr.split[2]], names[tr.split[3]]}};
    result.digraph = std::move(tr.digraph);
    result.steps.push_back(std::move(step));
  }
  for (int p = 0; p < d - 4; ++p) {
    result.digraph = pyramid(result.digraph);
    result.steps.push_back(FamilyStep{"pyramid", result.digraph.num_vertices(),
                                      result.digraph.lattice().num_facets(),
                                      result.digraph.lattice().dimension(), std::nullopt});
  }
  return result;
}

}  // namespace pdg
