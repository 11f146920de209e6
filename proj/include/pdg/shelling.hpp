#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/lattice.hpp"

namespace pdg {

enum class ShellingFailure { EmptyIntersection, NotPureCodimOne, NotBeginningSegment };
std::string_view to_string(ShellingFailure failure);

struct ShellingVerdict {
  bool is_shelling = true;
  std::optional<int> failing_index;  // 1-based position in the order
  std::optional<ShellingFailure> failing_reason;
  std::vector<FaceId> failing_intersection;  // maximal faces at the failing position
};

/// Decides shelling questions for the faces of one fixed lattice.
///
/// A facet K may follow a set X of facets of a face G when the maximal faces of
/// K ∩ (union of X) are facets of K that begin some shelling of K. Whether a set
/// of facets can be placed first, and whether a placed set extends to a full
/// shelling, depend only on the set, so both are memoized per face on bit masks
/// of the face's facets (its lower covers). The memo lives in the object.
class ShellingOracle {
 public:
  explicit ShellingOracle(const FaceLattice& lattice);

  const FaceLattice& lattice() const { return *lat_; }

  /// Maximal nonempty faces among {face ∩ h : h in prior}.
  std::vector<FaceId> maximal_intersections(FaceId face, std::span<const FaceId> prior) const;

  /// True iff the given facets of `face`, in some order, start a shelling of `face`.
  bool can_begin(FaceId face, std::span<const FaceId> facets);
  /// True iff `face` has a shelling at all.
  bool is_shellable(FaceId face);

  /// Checks an ordering of the facets of the top face (given as face ids).
  ShellingVerdict check(std::span<const FaceId> facet_order);

  struct Step {
    bool ok = true;
    std::optional<ShellingFailure> failure;
    std::vector<FaceId> intersection;
  };
  /// Whether `candidate` (a facet of `face`) may follow the facets in `placed`.
  Step step(FaceId face, std::span<const FaceId> placed, FaceId candidate);

  /// Mask form of step(): `placed` and `candidate` index the lower covers of `face`.
  bool can_follow(FaceId face, std::uint64_t placed, int candidate);

  /// Position of `facet` among the lower covers of `face`, or -1.
  int local_index(FaceId face, FaceId facet) const;
  std::uint64_t mask_of(FaceId face, std::span<const FaceId> facets) const;

 private:
  std::vector<VertexSet> maximal_pieces(FaceId face, std::uint64_t placed, int candidate) const;
  bool reachable(FaceId face, std::uint64_t set);
  bool completable(FaceId face, std::uint64_t set);
  bool begins(FaceId face, std::uint64_t set);

  const FaceLattice* lat_;
  std::vector<std::unordered_map<std::uint64_t, bool>> reach_memo_, complete_memo_;
};

/// Maximal faces of F_j ∩ (F_1 ∪ ... ∪ F_{j-1}) for the order of facet indices
/// `order`; `j` is 1-based and j = 1 gives the empty set.
std::vector<FaceId> boundary_intersection(const FaceLattice& lattice, std::span<const int> order, int j);

/// Whether the ridges (facets of the lattice's top face) begin a shelling of it.
bool is_beginning_segment(const FaceLattice& facet_lattice, std::span<const VertexSet> ridges);

/// Checks an ordering of facet indices of `lattice`.
ShellingVerdict is_shelling(const FaceLattice& lattice, std::span<const int> order);

/// Shelling property: some topological sort r of g makes r* a shelling of the polar.
bool shelling_property_exists(const PolytopalDigraph& g);

struct ShellingAllResult {
  bool holds = true;
  std::uint64_t orders_checked = 0;
  bool enumerated = false;  // every topological sort was checked one by one
  std::vector<int> counterexample;  // vertex order (prefix) that fails
};

/// Strong shelling property: every topological sort shells the polar.
/// Without audit, checks the first topological sort only. With audit, checks
/// every sort explicitly when there are at most `enumeration_cap`; beyond that,
/// sweeps every reachable prefix set instead.
ShellingAllResult shelling_property_all(const PolytopalDigraph& g, bool audit = false,
                                        std::uint64_t enumeration_cap = 100000);

struct BoundaryFormulaResult {
  bool holds = true;
  std::optional<int> failing_position;  // 1-based k
  std::vector<int> order;
};

/// For topological sorts v_1..v_n, compares the maximal faces of
/// F(v_k) ∩ ⋃_{i<k} F(v_i) and ⋃_{(v_j, v_k) edge} F(v_k) ∩ F(v_j) in the polar.
/// Checks up to `max_sorts` sorts. Throws Error(NotAcyclicUSO) otherwise.
BoundaryFormulaResult boundary_formula_check(const PolytopalDigraph& g, std::uint64_t max_sorts = 1);

}  // namespace pdg
