#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"

namespace pdg {

/// Where to cut: the simple unique sink `vertex` and the roles of its four
/// neighbours. `split` holds (v_1, v_2, v_3, v_4); when empty it is chosen
/// automatically as the lexicographically least admissible assignment.
struct TruncationSpec {
  int vertex = -1;
  std::optional<std::array<int, 4>> split;
};

struct TruncationResult {
  PolytopalDigraph digraph;
  std::array<int, 4> split;  // neighbours used, as indices of the input
  int u1 = -1;               // new vertex indices in the output
  int u2 = -1;
};

/// Combinatorial truncation of a 4-polytope at a simple unique sink.
///
/// The vertex v is removed and two vertices u_1 (on edge v v_1) and u_2 (on
/// edge v v_2) are appended. Facets away from v are kept; the four facets at v
/// are rewritten and the facet {u_1, u_2, v_3, v_4} is appended. Old edge
/// directions are kept; new edges are v_3->v_4 (if missing), v_1->u_1,
/// v_3->u_1, v_4->u_1, v_2->u_2, v_3->u_2, v_4->u_2 and u_1->u_2.
TruncationResult truncate(const PolytopalDigraph& g, const TruncationSpec& spec);

/// All splits (v_1..v_4) of the neighbours of `vertex` with no directed path
/// from v_4 to v_3, in lexicographic order.
std::vector<std::array<int, 4>> admissible_splits(const PolytopalDigraph& g, int vertex);

/// Pyramid over the polytope with a new apex; every new edge points into the apex.
PolytopalDigraph pyramid(const PolytopalDigraph& g);

struct FamilySpec {
  int dimension = 4;
  int vertices = 0;
};

struct FamilyStep {
  std::string operation;  // "truncate" or "pyramid"
  int num_vertices = 0;
  int num_facets = 0;
  int dimension = 0;
  std::optional<std::array<std::string, 5>> truncation;  // v, v_1..v_4 names
};

struct FamilyResult {
  PolytopalDigraph digraph;
  std::vector<FamilyStep> steps;
};

/// From a 4-polytope digraph with n_0 vertices whose unique sink is simple:
/// n - n_0 - d + 4 truncations at the current sink, then d - 4 pyramids.
/// Throws Error(BoundsViolation) if d < 4 or n < n_0 + d - 4.
FamilyResult family(const PolytopalDigraph& base, const FamilySpec& spec);

/// Unique sink of the whole digraph, if there is exactly one.
std::optional<int> unique_sink(const PolytopalDigraph& g);

}  // namespace pdg
