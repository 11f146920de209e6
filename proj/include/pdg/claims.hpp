#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/geometry.hpp"

namespace pdg {

/// A named digraph used by the corpus-wide checks.
struct CorpusEntry {
  std::string name;
  PolytopalDigraph digraph;
};

/// Omega, its first three truncations at the sink, pyramids over Omega up to
/// dimension 6, and every canonical crosspolytope orientation for 1 <= d <= 4.
std::vector<CorpusEntry> equivalence_corpus();

struct Claim {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ReproduceOptions {
  /// Replaces the embedded coordinates and inequalities in the verify-omega claim.
  std::optional<Geometry> omega_geometry;
};

Claim claim_verify_omega(const ReproduceOptions& options = {});
Claim claim_omega_classification();
Claim claim_equivalence(const std::vector<CorpusEntry>& corpus);
Claim claim_boundary_formula(const std::vector<CorpusEntry>& corpus);
Claim claim_preservation();
Claim claim_census(int d_max = 5);
Claim claim_bounds(int d_max = 8);
Claim claim_good_iff_shelling(int d_max = 4);
Claim claim_line_shellings(int lines = 20);

/// Every claim above, in that order.
std::vector<Claim> reproduce(const ReproduceOptions& options = {});

}  // namespace pdg
