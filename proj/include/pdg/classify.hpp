#pragma once

#include <optional>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/shelling.hpp"

namespace pdg {

/// The four necessary properties of LP digraphs, with evidence for failures.
struct PropertyReport {
  bool acyclic = false;
  bool uso = false;
  bool holt_klee = false;
  bool shelling = false;
  bool x_type = false;

  std::vector<int> cycle;                  // when not acyclic
  std::optional<FaceId> uso_witness;       // face without a unique source/sink
  HoltKleeResult holt_klee_detail;
  std::vector<int> checked_order;          // first topological sort, when acyclic
  std::optional<ShellingVerdict> shelling_witness;  // its verdict on the polar, when shelling fails
};

/// X-type means acyclic, USO and Holt-Klee but without the shelling property.
PropertyReport classify(const PolytopalDigraph& g);

}  // namespace pdg
