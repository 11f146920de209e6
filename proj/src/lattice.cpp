#include "pdg/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "pdg/error.hpp"

namespace pdg {

void VertexFacetIncidence::validate() const {
  const int n = num_vertices();
  if (n == 0) throw Error(ErrorKind::InvalidInput, name + ": no vertices");
  if (n > VertexSet::kCapacity || num_facets() > VertexSet::kCapacity)
    throw Error(ErrorKind::InvalidInput, name + ": more than 64 vertices or facets");
  if (facet_names.size() != facets.size())
    throw Error(ErrorKind::InvalidInput, name + ": facet name count mismatch");
  const VertexSet all = VertexSet::range(n);
  VertexSet covered;
  for (int f = 0; f < num_facets(); ++f) {
    if (!facets[f].subset_of(all))
      throw Error(ErrorKind::InvalidInput,
                  name + ": facet " + facet_names[f] + " has a vertex index out of range");
    covered |= facets[f];
    for (int g = 0; g < num_facets(); ++g) {
      if (g != f && facets[f].subset_of(facets[g]))
        throw Error(ErrorKind::InvalidInput,
                    name + ": facet " + facet_names[f] + " is contained in " + facet_names[g]);
    }
  }
  if (covered != all) {
    const int v = (all - covered).first();
    throw Error(ErrorKind::InvalidInput, name + ": vertex " + vertex_names[v] + " lies on no facet");
  }
}

int VertexFacetIncidence::vertex_index(const std::string& vertex_name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), vertex_name);
  return it == vertex_names.end() ? -1 : static_cast<int>(it - vertex_names.begin());
}

int VertexFacetIncidence::facet_index(const std::string& facet_name) const {
  auto it = std::find(facet_names.begin(), facet_names.end(), facet_name);
  return it == facet_names.end() ? -1 : static_cast<int>(it - facet_names.begin());
}

VertexFacetIncidence VertexFacetIncidence::from_lists(std::string name, int num_vertices,
                                                      const std::vector<std::vector<int>>& facets) {
  VertexFacetIncidence inc;
  inc.name = std::move(name);
  for (int v = 0; v < num_vertices; ++v) inc.vertex_names.push_back(std::to_string(v + 1));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (int v : facets[f]) {
      if (v < 0 || v >= num_vertices)
        throw Error(ErrorKind::InvalidInput, inc.name + ": vertex index out of range");
    }
    inc.facets.push_back(VertexSet::from(facets[f]));
    inc.facet_names.push_back("F_" + std::to_string(f + 1));
  }
  return inc;
}

FaceLattice FaceLattice::build(const VertexFacetIncidence& inc) {
  inc.validate();
  std::unordered_set<VertexSet> seen;
  std::deque<VertexSet> queue;
  const VertexSet all = VertexSet::range(inc.num_vertices());
  seen.insert(all);
  queue.push_back(all);
  while (!queue.empty()) {
    const VertexSet s = queue.front();
    queue.pop_front();
    for (VertexSet f : inc.facets) {
      const VertexSet t = s & f;
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return from_closed_sets(inc, std::vector<VertexSet>(seen.begin(), seen.end()));
}

FaceLattice FaceLattice::from_closed_sets(VertexFacetIncidence inc, std::vector<VertexSet> closed) {
  FaceLattice lat;
  lat.inc_ = std::move(inc);
  const int n = lat.inc_.num_vertices();
  const VertexSet all = VertexSet::range(n);

  std::sort(closed.begin(), closed.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return VertexSet::lex_less(a, b);
  });
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  if (closed.empty() || !closed.front().empty())
    throw Error(ErrorKind::NotALattice, lat.inc_.name + ": facets have a common vertex");
  if (closed.back() != all)
    throw Error(ErrorKind::NotALattice, lat.inc_.name + ": top face is not the full vertex set");

  const std::size_t count = closed.size();
  std::unordered_map<VertexSet, int> pos;
  for (std::size_t i = 0; i < count; ++i) pos.emplace(closed[i], static_cast<int>(i));

  // Lower covers of g: maximal sets among g & F over facets F not containing g.
  std::vector<std::vector<int>> lower(count);
  std::vector<int> rank(count, 0);
  for (std::size_t i = 1; i < count; ++i) {
    const VertexSet g = closed[i];
    std::vector<VertexSet> cand;
    for (VertexSet f : lat.inc_.facets) {
      if (g.subset_of(f)) continue;
      cand.push_back(g & f);
    }
    std::sort(cand.begin(), cand.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (VertexSet c : cand) {
      bool maximal = true;
      for (VertexSet o : cand) {
        if (c.proper_subset_of(o)) { maximal = false; break; }
      }
      if (!maximal) continue;
      auto it = pos.find(c);
      if (it == pos.end())
        throw Error(ErrorKind::NotALattice, lat.inc_.name + ": closure is not intersection-closed");
      lower[i].push_back(it->second);
    }
    if (lower[i].empty())
      throw Error(ErrorKind::NotALattice, lat.inc_.name + ": face without lower cover");
    int r = 0;
    for (int c : lower[i]) r = std::max(r, rank[c] + 1);
    rank[i] = r;
  }
  for (std::size_t i = 1; i < count; ++i) {
    for (int c : lower[i]) {
      if (rank[c] + 1 != rank[i])
        throw Error(ErrorKind::NotALattice,
                    lat.inc_.name + ": face lattice is not graded at " + lat.describe(closed[i]));
    }
  }
  lat.dim_ = rank[count - 1] - 1;

  // Stable order: dimension, then lexicographic vertex list.
  std::vector<int> perm(count);
  for (std::size_t i = 0; i < count; ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return VertexSet::lex_less(closed[a], closed[b]);
  });
  std::vector<int> where(count);
  for (std::size_t i = 0; i < count; ++i) where[perm[i]] = static_cast<int>(i);

  lat.faces_.resize(count);
  lat.lower_.assign(count, {});
  lat.upper_.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    const int src = perm[i];
    Face& face = lat.faces_[i];
    face.vertices = closed[src];
    face.dimension = rank[src] - 1;
    for (int f = 0; f < lat.inc_.num_facets(); ++f) {
      if (face.vertices.subset_of(lat.inc_.facets[f])) face.containing_facets.insert(f);
    }
    for (int c : lower[src]) lat.lower_[i].push_back(where[c]);
    std::sort(lat.lower_[i].begin(), lat.lower_[i].end());
    lat.index_.emplace(face.vertices, static_cast<FaceId>(i));
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (int c : lat.lower_[i]) lat.upper_[c].push_back(static_cast<FaceId>(i));
  }
  for (auto& u : lat.upper_) std::sort(u.begin(), u.end());

  lat.dim_offsets_.assign(lat.dim_ + 3, 0);
  for (const Face& f : lat.faces_) lat.dim_offsets_[f.dimension + 2]++;
  for (std::size_t k = 1; k < lat.dim_offsets_.size(); ++k)
    lat.dim_offsets_[k] += lat.dim_offsets_[k - 1];
  lat.order_.resize(count);
  for (std::size_t i = 0; i < count; ++i) lat.order_[i] = static_cast<FaceId>(i);

  // Atoms are the vertices, coatoms the facets.
  lat.vertex_face_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    VertexSet single;
    single.insert(v);
    auto it = lat.index_.find(single);
    if (lat.dim_ >= 0 && (it == lat.index_.end() || lat.faces_[it->second].dimension != 0))
      throw Error(ErrorKind::NotALattice,
                  lat.inc_.name + ": vertex " + lat.inc_.vertex_names[v] + " is not an atom");
    lat.vertex_face_[v] = it == lat.index_.end() ? -1 : it->second;
  }
  lat.facet_face_.assign(lat.inc_.num_facets(), -1);
  for (int f = 0; f < lat.inc_.num_facets(); ++f) {
    auto it = lat.index_.find(lat.inc_.facets[f]);
    if (it == lat.index_.end() || lat.faces_[it->second].dimension != lat.dim_ - 1)
      throw Error(ErrorKind::NotALattice,
                  lat.inc_.name + ": facet " + lat.inc_.facet_names[f] + " is not a coatom");
    lat.facet_face_[f] = it->second;
  }
  if (static_cast<int>(lat.lower_[count - 1].size()) != lat.inc_.num_facets())
    throw Error(ErrorKind::NotALattice, lat.inc_.name + ": coatoms differ from the facets");
  return lat;
}

std::optional<FaceId> FaceLattice::find(VertexSet vertices) const {
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FaceId FaceLattice::require(VertexSet vertices) const {
  auto id = find(vertices);
  if (!id) throw Error(ErrorKind::FaceNotFound, describe(vertices) + " is not a face of " + name());
  return *id;
}

std::span<const FaceId> FaceLattice::faces_of_dimension(int dim) const {
  if (dim < -1 || dim > dim_) return {};
  const int lo = dim_offsets_[dim + 1];
  const int hi = dim_offsets_[dim + 2];
  return std::span<const FaceId>(order_.data() + lo, static_cast<std::size_t>(hi - lo));
}

std::vector<std::string> FaceLattice::names_of(VertexSet vertices) const {
  std::vector<std::string> out;
  vertices.for_each([&](int v) {
    out.push_back(v < num_vertices() ? inc_.vertex_names[v] : "#" + std::to_string(v));
  });
  return out;
}

std::string FaceLattice::describe(VertexSet vertices) const {
  std::string out = "{";
  bool first = true;
  for (const std::string& s : names_of(vertices)) {
    if (!first) out += ",";
    out += s;
    first = false;
  }
  return out + "}";
}

FaceLattice polar(const FaceLattice& lattice) {
  const VertexFacetIncidence& in = lattice.incidence();
  VertexFacetIncidence out;
  out.name = in.name + "*";
  out.vertex_names = in.facet_names;
  out.facet_names = in.vertex_names;
  for (int v = 0; v < in.num_vertices(); ++v) {
    VertexSet s;
    for (int f = 0; f < in.num_facets(); ++f) {
      if (in.facets[f].contains(v)) s.insert(f);
    }
    out.facets.push_back(s);
  }
  std::vector<VertexSet> closed;
  closed.reserve(lattice.num_faces());
  for (const Face& f : lattice.faces()) closed.push_back(f.containing_facets);
  return FaceLattice::from_closed_sets(std::move(out), std::move(closed));
}

Skeleton skeleton(const FaceLattice& lattice) {
  Skeleton sk;
  sk.num_vertices = lattice.num_vertices();
  for (FaceId id : lattice.faces_of_dimension(1)) {
    const VertexSet e = lattice.face(id).vertices;
    if (e.size() != 2)
      throw Error(ErrorKind::MalformedLattice,
                  "1-face " + lattice.describe(e) + " does not have two vertices");
    const auto m = e.members();
    sk.edges.emplace_back(m[0], m[1]);
  }
  return sk;
}

FaceLattice faces_of(const FaceLattice& lattice, FaceId face) {
  if (face < 0 || face >= lattice.num_faces())
    throw Error(ErrorKind::FaceNotFound, "face id out of range");
  const VertexSet verts = lattice.face(face).vertices;
  const std::vector<int> members = verts.members();
  std::vector<int> local(lattice.num_vertices(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  auto relabel = [&](VertexSet s) {
    VertexSet r;
    s.for_each([&](int v) { r.insert(local[v]); });
    return r;
  };

  VertexFacetIncidence inc;
  inc.name = lattice.name() + lattice.describe(verts);
  for (int v : members) inc.vertex_names.push_back(lattice.incidence().vertex_names[v]);
  if (lattice.face(face).dimension >= 0) {
    for (FaceId c : lattice.lower_covers(face)) {
      inc.facets.push_back(relabel(lattice.face(c).vertices));
      inc.facet_names.push_back(lattice.describe(lattice.face(c).vertices));
    }
  }
  std::vector<VertexSet> closed;
  for (const Face& f : lattice.faces()) {
    if (f.vertices.subset_of(verts)) closed.push_back(relabel(f.vertices));
  }
  return FaceLattice::from_closed_sets(std::move(inc), std::move(closed));
}

FaceLattice faces_of(const FaceLattice& lattice, VertexSet face) {
  return faces_of(lattice, lattice.require(face));
}

bool same_incidence(const VertexFacetIncidence& a, const VertexFacetIncidence& b) {
  if (a.vertex_names != b.vertex_names) return false;
  std::multiset<std::uint64_t> fa, fb;
  for (VertexSet s : a.facets) fa.insert(s.bits());
  for (VertexSet s : b.facets) fb.insert(s.bits());
  return fa == fb;
}

}  // namespace pdg
