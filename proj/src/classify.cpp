#include "pdg/classify.hpp"

namespace pdg {

PropertyReport classify(const PolytopalDigraph& g) {
  PropertyReport r;
  const AcyclicityResult ac = is_acyclic(g);
  r.acyclic = ac.acyclic;
  r.cycle = ac.cycle;

  const UsoResult uso = is_uso(g);
  r.uso = uso.uso;
  r.uso_witness = uso.witness;

  r.holt_klee_detail = holt_klee(g);
  r.holt_klee = r.holt_klee_detail.holt_klee;

  if (r.acyclic) {
    r.shelling = shelling_property_exists(g);
    r.checked_order = first_topological_sort(g);
    if (!r.shelling) {
      const FaceLattice dual = polar(g.lattice());
      r.shelling_witness = is_shelling(dual, r.checked_order);
    }
  }
  r.x_type = r.acyclic && r.uso && r.holt_klee && !r.shelling;
  return r;
}

}  // namespace pdg
