#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pdg/lattice.hpp"

namespace pdg {

using Edge = std::pair<int, int>;  // tail -> head

/// Orientation of the skeleton of a polytope, kept together with the polytope.
class PolytopalDigraph {
 public:
  /// Throws Error(InvalidInput) unless every skeleton edge is oriented exactly once
  /// and no other pair appears.
  PolytopalDigraph(std::shared_ptr<const FaceLattice> lattice, std::vector<Edge> edges);
  PolytopalDigraph(FaceLattice lattice, std::vector<Edge> edges)
      : PolytopalDigraph(std::make_shared<const FaceLattice>(std::move(lattice)), std::move(edges)) {}

  const FaceLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const FaceLattice>& lattice_ptr() const { return lattice_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return lattice_->num_vertices(); }

  VertexSet out_neighbors(int v) const { return out_[v]; }
  VertexSet in_neighbors(int v) const { return in_[v]; }
  bool has_edge(int tail, int head) const { return out_[tail].contains(head); }
  bool has_path(int from, int to) const;

 private:
  std::shared_ptr<const FaceLattice> lattice_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> out_, in_;
};

/// Orients every skeleton edge from the lower to the higher vertex index.
PolytopalDigraph index_orientation(std::shared_ptr<const FaceLattice> lattice);
/// Orients every skeleton edge so that `rank` increases along it; ties are rejected.
PolytopalDigraph ranked_orientation(std::shared_ptr<const FaceLattice> lattice,
                                    const std::vector<long long>& rank);

struct AcyclicityResult {
  bool acyclic = true;
  std::vector<int> cycle;  // v0 -> v1 -> ... -> v0 (closing vertex not repeated)
};
AcyclicityResult is_acyclic(const PolytopalDigraph& g);

/// Enumerates every topological sort, lexicographically by vertex index among
/// the currently available minima. Throws Error(CyclicInput) on construction
/// if the digraph has a cycle.
class TopologicalSorts {
 public:
  explicit TopologicalSorts(const PolytopalDigraph& g);
  std::optional<std::vector<int>> next();

 private:
  bool advance_from(std::size_t depth);

  const PolytopalDigraph* g_;
  std::vector<int> order_;
  VertexSet placed_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<int> first_topological_sort(const PolytopalDigraph& g);
/// Exact number of topological sorts, saturating at `cap` (returns cap + 1 when exceeded).
std::uint64_t count_topological_sorts(const PolytopalDigraph& g, std::uint64_t cap);

struct SourcesSinks {
  VertexSet sources;
  VertexSet sinks;
};
SourcesSinks face_sources_sinks(const PolytopalDigraph& g, FaceId face);
SourcesSinks face_sources_sinks(const PolytopalDigraph& g, VertexSet face);

struct UsoResult {
  bool uso = true;
  std::optional<FaceId> witness;  // first face without a unique source and sink
};
UsoResult is_uso(const PolytopalDigraph& g);

/// Maximum number of internally vertex-disjoint directed paths from `source`
/// to `sink` inside the subdigraph induced by `within`.
int max_disjoint_paths(const PolytopalDigraph& g, VertexSet within, int source, int sink);

struct HoltKleeResult {
  bool holt_klee = true;
  bool uso_failed = false;
  std::optional<FaceId> witness;
  int paths = 0;      // disjoint paths found on the witness face
  int required = 0;   // its dimension
};
HoltKleeResult holt_klee(const PolytopalDigraph& g);

}  // namespace pdg
