#pragma once

// Brute-force reference computations used as oracles by the unit tests.
// They are deliberately naive and share no code with the library beyond the
// plain data types.

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/geometry.hpp"
#include "pdg/lattice.hpp"

namespace oracle {

using pdg::Rational;
using pdg::VertexSet;

// Every intersection of a family of facets (the empty family gives all vertices),
// with its dimension from the longest chain above the empty set.
inline std::map<std::uint64_t, int> faces(const pdg::VertexFacetIncidence& inc) {
  std::set<std::uint64_t> closed;
  const int m = inc.num_facets();
  const std::uint64_t all = VertexSet::range(inc.num_vertices()).bits();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t s = all;
    for (int f = 0; f < m; ++f) {
      if ((mask >> f) & 1) s &= inc.facets[f].bits();
    }
    closed.insert(s);
  }
  std::vector<std::uint64_t> sorted(closed.begin(), closed.end());
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
  });
  std::map<std::uint64_t, int> rank;
  for (std::uint64_t s : sorted) {
    int r = 0;
    for (auto [t, rt] : rank) {
      if (t != s && (t & ~s) == 0) r = std::max(r, rt + 1);
    }
    rank[s] = r;
  }
  std::map<std::uint64_t, int> dim;
  for (auto [s, r] : rank) dim[s] = r - 1;
  return dim;
}

inline std::vector<int> f_vector(const pdg::VertexFacetIncidence& inc) {
  std::vector<int> f;
  for (auto [s, d] : faces(inc)) {
    if (d < 0) continue;
    if (static_cast<int>(f.size()) <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  f.pop_back();  // the polytope itself
  return f;
}

// All permutations of 0..n-1 that put every tail before its head.
inline std::vector<std::vector<int>> linear_extensions(int n, const std::vector<pdg::Edge>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (auto [a, b] : edges) ok = ok && pos[a] < pos[b];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Ends {
  std::vector<int> sources, sinks;
};

inline Ends sources_sinks(VertexSet face, const std::vector<pdg::Edge>& edges) {
  Ends e;
  for (int v : face.members()) {
    bool in = false, out = false;
    for (auto [a, b] : edges) {
      if (!face.contains(a) || !face.contains(b)) continue;
      if (b == v) in = true;
      if (a == v) out = true;
    }
    if (!in) e.sources.push_back(v);
    if (!out) e.sinks.push_back(v);
  }
  return e;
}

inline bool reaches(int s, int t, VertexSet alive, const std::vector<pdg::Edge>& edges) {
  std::vector<int> stack{s};
  VertexSet seen = VertexSet::of({s});
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == t) return true;
    for (auto [a, b] : edges) {
      if (a == x && alive.contains(b) && !seen.contains(b)) {
        seen.insert(b);
        stack.push_back(b);
      }
    }
  }
  return false;
}

// Menger: internally disjoint s-t paths = smallest separating set of inner
// vertices, plus one for a direct edge. Exponential search over cut sets.
inline int disjoint_paths(VertexSet within, int s, int t, const std::vector<pdg::Edge>& edges) {
  std::vector<pdg::Edge> inner;
  int direct = 0;
  for (auto [a, b] : edges) {
    if (!within.contains(a) || !within.contains(b)) continue;
    if (a == s && b == t) {
      direct = 1;
      continue;
    }
    inner.emplace_back(a, b);
  }
  const std::vector<int> mids = (within - VertexSet::of({s, t})).members();
  const int k = static_cast<int>(mids.size());
  int best = k;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    VertexSet alive = within;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1) alive.erase(mids[i]);
    }
    if (!reaches(s, t, alive, inner)) best = size;
  }
  return best + direct;
}

// Maximal sets among `sets` (duplicates and empties dropped).
inline std::vector<VertexSet> maximal(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    if (s.empty()) continue;
    bool dominated = false;
    for (VertexSet t : sets) dominated = dominated || s.proper_subset_of(t);
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

// Shelling of a 3-polytope: each new polygon meets the earlier ones in a
// nonempty union of its edges forming one path, or its whole boundary.
inline bool is_shelling_3d(const pdg::FaceLattice& lat, const std::vector<int>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    const VertexSet k = lat.incidence().facets[order[j]];
    std::vector<VertexSet> pieces;
    for (std::size_t i = 0; i < j; ++i) pieces.push_back(k & lat.incidence().facets[order[i]]);
    const auto top = maximal(pieces);
    if (top.empty()) return false;
    for (VertexSet p : top) {
      if (p.size() != 2) return false;
    }
    // edges of the polygon k in the intersection must form a path or the cycle
    std::map<int, int> degree;
    for (VertexSet p : top) p.for_each([&](int v) { ++degree[v]; });
    int ends = 0;
    for (auto [v, d] : degree) {
      if (d == 1) ++ends;
      if (d > 2) return false;
    }
    const int edges_in_polygon = k.size();
    const int used = static_cast<int>(top.size());
    if (used == edges_in_polygon) continue;  // whole boundary
    if (ends != 2) return false;
    if (static_cast<int>(degree.size()) != used + 1) return false;  // one path, not several
  }
  return true;
}

// Shelling of a 4-polytope: each new 3-polytope facet meets the earlier ones in
// a union of its 2-faces that is a disk with a disk complement, or its whole boundary.
inline bool polygons_form_disk(const std::vector<VertexSet>& polys, const pdg::FaceLattice& lat) {
  if (polys.empty()) return false;
  std::map<std::uint64_t, int> edge_count;
  std::set<int> verts;
  for (VertexSet p : polys) {
    for (pdg::FaceId e : lat.lower_covers(lat.require(p))) ++edge_count[lat.face(e).vertices.bits()];
    p.for_each([&](int v) { verts.insert(v); });
  }
  for (auto [e, c] : edge_count) {
    if (c > 2) return false;
  }
  std::vector<int> comp(polys.size(), -1);
  int components = 0;
  for (std::size_t s = 0; s < polys.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < polys.size(); ++b) {
        if (comp[b] >= 0) continue;
        const auto shared = lat.find(polys[a] & polys[b]);
        if (shared && lat.face(*shared).dimension == 1) {
          comp[b] = components;
          stack.push_back(b);
        }
      }
    }
    ++components;
  }
  if (components != 1) return false;
  std::map<int, int> boundary_degree;
  long boundary = 0;
  for (auto [e, c] : edge_count) {
    if (c == 1) {
      ++boundary;
      VertexSet(e).for_each([&](int v) { ++boundary_degree[v]; });
    }
  }
  for (auto [v, d] : boundary_degree) {
    if (d != 2) return false;
  }
  const long euler = static_cast<long>(verts.size()) - static_cast<long>(edge_count.size()) +
                     static_cast<long>(polys.size());
  return euler == 1 && boundary > 0 && static_cast<long>(boundary_degree.size()) == boundary;
}

inline bool is_shelling_4d(const pdg::FaceLattice& lat, const std::vector<int>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    const pdg::FaceId kid = lat.facet_face(order[j]);
    const VertexSet k = lat.face(kid).vertices;
    std::vector<VertexSet> polys;
    std::vector<VertexSet> raw;
    for (std::size_t i = 0; i < j; ++i) {
      const VertexSet piece = k & lat.incidence().facets[order[i]];
      raw.push_back(piece);
      const auto f = lat.find(piece);
      if (f && lat.face(*f).dimension == 2) polys.push_back(piece);
    }
    for (VertexSet piece : raw) {
      if (piece.empty()) continue;
      bool covered = false;
      for (VertexSet p : polys) covered = covered || piece.subset_of(p);
      if (!covered) return false;
    }
    if (j + 1 == order.size()) continue;
    std::vector<VertexSet> rest;
    for (pdg::FaceId r : lat.lower_covers(kid)) {
      const VertexSet ridge = lat.face(r).vertices;
      if (std::find(polys.begin(), polys.end(), ridge) == polys.end()) rest.push_back(ridge);
    }
    if (rest.empty()) continue;
    if (!polygons_form_disk(polys, lat) || !polygons_form_disk(rest, lat)) return false;
  }
  return true;
}

// ---- exact linear algebra and geometric constructions ----

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A nonzero (normal, offset) with normal . p = offset for each of the d given points in R^d.
inline pdg::Halfspace hyperplane_through(const std::vector<std::vector<Rational>>& pts) {
  const std::size_t d = pts.size();
  // unknowns: normal (d) and offset; rows: normal . p - offset = 0
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r][c] = pts[r][c];
    m[r][d] = -1;
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c <= d && row < d; ++c) {
    std::size_t p = row;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[row][c];
      for (std::size_t k = 0; k <= d; ++k) m[r][k] -= factor * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(d + 1, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  std::vector<Rational> x(d + 1, 0);
  x[free] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free] / m[r][pivot_col[r]];
  pdg::Halfspace h;
  h.normal.assign(x.begin(), x.begin() + static_cast<long>(d));
  h.offset = x[d];
  return h;
}

// Polar of a polytope with the origin in its interior: vertices a_i / b_i.
inline pdg::Geometry polar_geometry(const pdg::Geometry& g) {
  pdg::Geometry out;
  for (std::size_t f = 0; f < g.halfspaces.size(); ++f) {
    pdg::RationalPoint p;
    for (const Rational& a : g.halfspaces[f].normal) p.coords.push_back(a / g.halfspaces[f].offset);
    out.points.push_back(p);
    out.vertex_names.push_back(g.facet_names[f]);
  }
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    out.halfspaces.push_back(pdg::Halfspace{g.points[v].coords, 1});
    out.facet_names.push_back(g.vertex_names[v]);
  }
  return out;
}

// Cuts vertex v off with the hyperplane through u_1 on [v, v_1], u_2 on [v, v_2],
// v_3 and v_4. Vertices keep their order with v removed and u_1, u_2 appended;
// the cut facet is appended last. Tries several positions for u_1, u_2.
inline std::optional<pdg::Geometry> geometric_truncation(const pdg::Geometry& g, int v, std::array<int, 4> split,
                                                         const std::string& vname) {
  for (Rational t : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 5), Rational(4, 5)}) {
    auto along = [&](int w) {
      std::vector<Rational> p(g.points[v].coords.size());
      for (std::size_t k = 0; k < p.size(); ++k)
        p[k] = g.points[v].coords[k] + t * (g.points[w].coords[k] - g.points[v].coords[k]);
      return p;
    };
    const auto u1 = along(split[0]);
    const auto u2 = along(split[1]);
    pdg::Halfspace cut = hyperplane_through({u1, u2, g.points[split[2]].coords, g.points[split[3]].coords});
    if (dot(cut.normal, g.points[v].coords) < cut.offset) {
      for (Rational& x : cut.normal) x = -x;
      cut.offset = -cut.offset;
    }
    // v is now on the side normal . x >= offset; the kept side is the other one
    const pdg::Halfspace keep = cut;
    bool separates = dot(cut.normal, g.points[v].coords) > cut.offset;
    for (std::size_t w = 0; w < g.points.size(); ++w) {
      if (static_cast<int>(w) == v || static_cast<int>(w) == split[2] || static_cast<int>(w) == split[3]) continue;
      separates = separates && dot(cut.normal, g.points[w].coords) < cut.offset;
    }
    if (!separates) continue;
    pdg::Geometry out;
    for (std::size_t w = 0; w < g.points.size(); ++w) {
      if (static_cast<int>(w) == v) continue;
      out.points.push_back(g.points[w]);
      out.vertex_names.push_back(g.vertex_names[w]);
    }
    out.points.push_back(pdg::RationalPoint{u1});
    out.vertex_names.push_back("u1[" + vname + "]");
    out.points.push_back(pdg::RationalPoint{u2});
    out.vertex_names.push_back("u2[" + vname + "]");
    out.halfspaces = g.halfspaces;
    out.facet_names = g.facet_names;
    out.halfspaces.push_back(keep);
    out.facet_names.push_back("H[" + vname + "]");
    return out;
  }
  return std::nullopt;
}

// Pyramid: the polytope at height 0 and the apex at height 1 over an interior point.
inline pdg::Geometry geometric_pyramid(const pdg::Geometry& g, const std::string& apex_name,
                                       const std::string& base_name) {
  const std::size_t d = g.points.front().coords.size();
  std::vector<Rational> c(d, 0);
  for (const auto& p : g.points) {
    for (std::size_t k = 0; k < d; ++k) c[k] += p.coords[k];
  }
  for (Rational& x : c) x /= static_cast<int>(g.points.size());
  pdg::Geometry out;
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    auto p = g.points[v].coords;
    p.push_back(0);
    out.points.push_back(pdg::RationalPoint{p});
    out.vertex_names.push_back(g.vertex_names[v]);
  }
  auto apex = c;
  apex.push_back(1);
  out.points.push_back(pdg::RationalPoint{apex});
  out.vertex_names.push_back(apex_name);
  // a.x <= b lifted to a.x + (b - a.c) h <= b: tight at the apex, unchanged at h = 0
  for (std::size_t f = 0; f < g.halfspaces.size(); ++f) {
    auto a = g.halfspaces[f].normal;
    a.push_back(g.halfspaces[f].offset - dot(g.halfspaces[f].normal, c));
    out.halfspaces.push_back(pdg::Halfspace{a, g.halfspaces[f].offset});
    out.facet_names.push_back(g.facet_names[f]);
  }
  std::vector<Rational> down(d + 1, 0);
  down[d] = -1;
  out.halfspaces.push_back(pdg::Halfspace{down, 0});
  out.facet_names.push_back(base_name);
  return out;
}

}  // namespace oracle
