#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdg/vertex_set.hpp"

namespace pdg {

/// Vertex-facet incidence of a polytope: the only combinatorial input format.
struct VertexFacetIncidence {
  std::string name;
  std::vector<std::string> vertex_names;
  std::vector<VertexSet> facets;
  std::vector<std::string> facet_names;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_facets() const { return static_cast<int>(facets.size()); }

  /// Throws Error(InvalidInput) when indices are out of range, a facet contains
  /// another facet, or some vertex lies on no facet.
  void validate() const;

  int vertex_index(const std::string& vertex_name) const;  // -1 if absent
  int facet_index(const std::string& facet_name) const;    // -1 if absent

  /// Builds an incidence from 0-based index lists; names default to "1".."n" and "F_1".."F_m".
  static VertexFacetIncidence from_lists(std::string name, int num_vertices,
                                         const std::vector<std::vector<int>>& facets);
};

using FaceId = int;

struct Face {
  VertexSet vertices;
  int dimension = -1;  // the empty face has dimension -1
  VertexSet containing_facets;
};

/// Graded poset of all faces of a polytope, keyed by vertex set.
///
/// Faces are stored in a fixed order (dimension, then lexicographic vertex
/// list) and the value is immutable once built.
class FaceLattice {
 public:
  /// Computes every intersection of facets and ranks them. Throws
  /// Error(NotALattice) if the closure system is not graded or its atoms and
  /// coatoms are not the vertices and facets.
  static FaceLattice build(const VertexFacetIncidence& inc);

  const VertexFacetIncidence& incidence() const { return inc_; }
  const std::string& name() const { return inc_.name; }
  int dimension() const { return dim_; }
  int num_vertices() const { return inc_.num_vertices(); }
  int num_facets() const { return inc_.num_facets(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId id) const { return faces_[id]; }
  std::optional<FaceId> find(VertexSet vertices) const;
  FaceId require(VertexSet vertices) const;  // throws Error(FaceNotFound)

  FaceId bottom() const { return 0; }
  FaceId top() const { return num_faces() - 1; }
  /// Face ids of one dimension in lattice order; dimension -1 is the bottom.
  std::span<const FaceId> faces_of_dimension(int dim) const;
  FaceId vertex_face(int v) const { return vertex_face_[v]; }
  FaceId facet_face(int f) const { return facet_face_[f]; }

  /// Faces covered by `id` (its facets, as faces of this lattice).
  const std::vector<FaceId>& lower_covers(FaceId id) const { return lower_[id]; }
  const std::vector<FaceId>& upper_covers(FaceId id) const { return upper_[id]; }

  /// "{a,b,c}" using vertex names.
  std::string describe(VertexSet vertices) const;
  std::vector<std::string> names_of(VertexSet vertices) const;

  /// Assembles a lattice from a complete list of closed sets. Used for
  /// intervals and polars whose incidence need not satisfy validate().
  static FaceLattice from_closed_sets(VertexFacetIncidence inc, std::vector<VertexSet> closed);

 private:
  VertexFacetIncidence inc_;
  int dim_ = -1;
  std::vector<Face> faces_;
  std::vector<int> dim_offsets_;  // faces_of_dimension(k) = [off[k+1], off[k+2])
  std::vector<FaceId> order_;
  std::vector<std::vector<FaceId>> lower_, upper_;
  std::vector<FaceId> vertex_face_, facet_face_;
  std::unordered_map<VertexSet, FaceId> index_;
};

/// The lattice turned upside down: facets become vertices (keeping their
/// names) and vertices become facets. polar(polar(L)) reproduces L exactly.
FaceLattice polar(const FaceLattice& lattice);

struct Skeleton {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (low index, high index), lattice order
};

/// Vertices and 1-faces. Throws Error(MalformedLattice) if a 1-face does not
/// have exactly two vertices.
Skeleton skeleton(const FaceLattice& lattice);

/// The interval [bottom, face] as a lattice of dimension dim(face), with the
/// face's vertices renumbered in increasing order and their names kept.
FaceLattice faces_of(const FaceLattice& lattice, FaceId face);
FaceLattice faces_of(const FaceLattice& lattice, VertexSet face);

/// Same vertex names and the same set of facets (facet order ignored).
bool same_incidence(const VertexFacetIncidence& a, const VertexFacetIncidence& b);

}  // namespace pdg
