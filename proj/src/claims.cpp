#include "pdg/claims.hpp"

#include <chrono>
#include <sstream>

#include "pdg/classify.hpp"
#include "pdg/constructions.hpp"
#include "pdg/crosspolytope.hpp"
#include "pdg/datasets.hpp"
#include "pdg/error.hpp"
#include "pdg/shelling.hpp"

namespace pdg {

namespace {

template <class F>
Claim timed(std::string id, std::string statement, F&& body) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

PolytopalDigraph truncate_at_sink(const PolytopalDigraph& g) {
  const auto sink = unique_sink(g);
  if (!sink) throw Error(ErrorKind::NotUniqueSink, "digraph has no unique sink");
  return truncate(g, TruncationSpec{*sink, std::nullopt}).digraph;
}

std::vector<PairSequence> cross_x_type_sequences(int d) {
  std::vector<PairSequence> out;
  for_each_pair_sequence(d, [&](const PairSequence& s) {
    if (has_unique_source(s) && has_unique_sink(s) && !is_good(s)) out.push_back(s);
  });
  return out;
}

std::string flags(const PropertyReport& r) {
  std::string s;
  s += r.acyclic ? 'A' : 'a';
  s += r.uso ? 'U' : 'u';
  s += r.holt_klee ? 'H' : 'h';
  s += r.shelling ? 'S' : 's';
  return s;
}

}  // namespace

std::vector<CorpusEntry> equivalence_corpus() {
  std::vector<CorpusEntry> corpus;
  const PolytopalDigraph omega = omega_digraph();
  corpus.push_back({"Omega", omega});
  PolytopalDigraph current = omega;
  for (int k = 1; k <= 3; ++k) {
    current = truncate_at_sink(current);
    corpus.push_back({"tr^" + std::to_string(k) + "(Omega)", current});
  }
  current = omega;
  for (int d = 5; d <= 6; ++d) {
    current = pyramid(current);
    corpus.push_back({"py^" + std::to_string(d - 4) + "(Omega)", current});
  }
  for (int d = 1; d <= 4; ++d) {
    auto lattice = crosspolytope_lattice(d);
    for_each_pair_sequence(d, [&](const PairSequence& s) {
      corpus.push_back({"C_" + std::to_string(d) + " " + s.to_string(), to_digraph(orientation_of(s), lattice)});
    });
  }
  return corpus;
}

Claim claim_verify_omega(const ReproduceOptions& options) {
  return timed("verify-omega", "coordinates and inequalities reproduce the ten printed facet vertex lists",
               [&](Claim& c) {
                 const Geometry geo = options.omega_geometry ? *options.omega_geometry : omega_star_geometry();
                 const VertexFacetIncidence inc = verify_vh(geo, "Omega*");
                 const auto printed = omega_star_printed_facets();
                 if (inc.num_facets() != static_cast<int>(printed.size())) {
                   c.detail = "expected " + std::to_string(printed.size()) + " facets, got " +
                              std::to_string(inc.num_facets());
                   return;
                 }
                 int matched = 0;
                 std::ostringstream bad;
                 for (std::size_t f = 0; f < printed.size(); ++f) {
                   VertexSet expected;
                   for (int v : printed[f]) expected.insert(v - 1);
                   if (inc.facets[f] == expected) {
                     ++matched;
                   } else {
                     bad << " F_" << f + 1;
                   }
                 }
                 c.passed = matched == static_cast<int>(printed.size());
                 c.detail = std::to_string(matched) + "/10 facets match";
                 if (!c.passed) c.detail += "; mismatched:" + bad.str();
               });
}

Claim claim_omega_classification() {
  return timed("omega-x-type",
               "G(Omega) is acyclic, USO and Holt-Klee without the shelling property; unique sort fails at 3",
               [](Claim& c) {
                 const PolytopalDigraph g = omega_digraph();
                 const PropertyReport r = classify(g);
                 const std::uint64_t sorts = count_topological_sorts(g, 10);
                 std::ostringstream d;
                 d << "flags " << flags(r) << ", topological sorts " << sorts;
                 bool witness_ok = false;
                 if (r.shelling_witness && r.shelling_witness->failing_index) {
                   const FaceLattice dual = polar(g.lattice());
                   std::vector<std::string> pieces;
                   for (FaceId f : r.shelling_witness->failing_intersection)
                     pieces.push_back(dual.describe(dual.face(f).vertices));
                   d << ", fails at " << *r.shelling_witness->failing_index << " with";
                   for (const auto& p : pieces) d << ' ' << p;
                   witness_ok = *r.shelling_witness->failing_index == 3 &&
                                pieces == std::vector<std::string>{"{2,5,7}", "{3,6,7}"};
                 }
                 if (r.uso_witness) d << ", face without unique sink/source " << g.lattice().describe(g.lattice().face(*r.uso_witness).vertices);
                 c.passed = r.acyclic && r.uso && r.holt_klee && !r.shelling && r.x_type && witness_ok && sorts == 1;
                 c.detail = d.str();
               });
}

Claim claim_equivalence(const std::vector<CorpusEntry>& corpus) {
  return timed("shelling-equivalence", "some topological sort shells the polar iff every one does (audit)",
               [&](Claim& c) {
                 int checked = 0, mismatches = 0;
                 std::string first;
                 for (const CorpusEntry& e : corpus) {
                   if (!is_acyclic(e.digraph).acyclic) continue;
                   ++checked;
                   const bool exists = shelling_property_exists(e.digraph);
                   const bool all = shelling_property_all(e.digraph, true).holds;
                   if (exists != all) {
                     ++mismatches;
                     if (first.empty()) first = e.name;
                   }
                 }
                 c.passed = mismatches == 0;
                 c.detail = std::to_string(checked) + " digraphs, " + std::to_string(mismatches) + " discrepancies";
                 if (!first.empty()) c.detail += " (first: " + first + ")";
               });
}

Claim claim_boundary_formula(const std::vector<CorpusEntry>& corpus) {
  return timed("boundary-formula", "F(v_k) meets the earlier facets exactly along edges into v_k",
               [&](Claim& c) {
                 int checked = 0, skipped = 0, failures = 0;
                 std::string first;
                 for (const CorpusEntry& e : corpus) {
                   if (!is_acyclic(e.digraph).acyclic || !is_uso(e.digraph).uso) {
                     ++skipped;
                     continue;
                   }
                   ++checked;
                   if (!boundary_formula_check(e.digraph, 1000).holds) {
                     ++failures;
                     if (first.empty()) first = e.name;
                   }
                 }
                 c.passed = failures == 0 && checked > 0;
                 c.detail = std::to_string(checked) + " acyclic USOs checked, " + std::to_string(failures) +
                            " failures, " + std::to_string(skipped) + " skipped (not acyclic USO)";
                 if (!first.empty()) c.detail += " (first: " + first + ")";
               });
}

Claim claim_preservation() {
  return timed("x-type-preservation", "truncation and pyramid map X-type inputs to X-type outputs",
               [](Claim& c) {
                 struct Instance {
                   std::string name;
                   PolytopalDigraph input;
                   PolytopalDigraph output;
                 };
                 std::vector<Instance> instances;
                 const PolytopalDigraph omega = omega_digraph();
                 const PolytopalDigraph tr1 = truncate_at_sink(omega);
                 instances.push_back({"tr(Omega)", omega, tr1});
                 instances.push_back({"tr(tr(Omega))", tr1, truncate_at_sink(tr1)});
                 instances.push_back({"py(Omega)", omega, pyramid(omega)});
                 instances.push_back({"family(Omega, 5, 12)", omega, family(omega, {5, 12}).digraph});
                 instances.push_back({"family(Omega, 6, 13)", omega, family(omega, {6, 13}).digraph});
                 auto lattice = crosspolytope_lattice(4);
                 for (const PairSequence& s : cross_x_type_sequences(4)) {
                   const PolytopalDigraph g = to_digraph(orientation_of(s), lattice);
                   instances.push_back({"py(C_4 " + s.to_string() + ")", g, pyramid(g)});
                 }
                 const PolytopalDigraph py1 = instances.back().output;
                 instances.push_back({"py(" + instances.back().name + ")", py1, pyramid(py1)});

                 int passed = 0;
                 std::ostringstream failed;
                 for (const Instance& inst : instances) {
                   const PropertyReport in = classify(inst.input);
                   const PropertyReport out = classify(inst.output);
                   if (in.x_type && out.x_type) {
                     ++passed;
                   } else {
                     failed << "; " << inst.name << ": input " << flags(in) << ", output " << flags(out);
                   }
                 }
                 c.passed = passed == static_cast<int>(instances.size()) && passed >= 5;
                 c.detail = std::to_string(passed) + "/" + std::to_string(instances.size()) +
                            " instances X-type in and out" + failed.str();
               });
}

Claim claim_census(int d_max) {
  return timed("census", "pair-sequence census: totals (2d-1)!!, a_d by enumeration and recurrence, b_d two ways",
               [&](Claim& c) {
                 const std::vector<std::uint64_t> expected_good = {1, 2, 10, 74, 706};
                 bool ok = true;
                 std::ostringstream d;
                 d << "good";
                 for (int k = 1; k <= d_max; ++k) {
                   const CensusRow row = census(k);
                   d << ' ' << row.good;
                   ok = ok && row.consistent() && row.total_formula == row.total;
                   if (k <= static_cast<int>(expected_good.size())) ok = ok && row.good == expected_good[k - 1];
                   if (k == 4) {
                     ok = ok && row.uso == 78 && row.x_type == 4;
                     d << " (d=4: uso " << row.uso << ", x-type " << row.x_type << ")";
                   }
                 }
                 c.passed = ok;
                 c.detail = d.str();
               });
}

Claim claim_bounds(int d_max) {
  return timed("bounds", "exact bounds on a_d, b_d - a_d and a_d / b_d for 4 <= d <= " + std::to_string(d_max),
               [&](Claim& c) {
                 const auto rows = bounds_check(d_max);
                 int ok = 0;
                 for (const BoundsRow& r : rows) ok += r.ok() ? 1 : 0;
                 c.passed = ok == static_cast<int>(rows.size());
                 c.detail = std::to_string(ok) + "/" + std::to_string(rows.size()) + " dimensions satisfy all four";
               });
}

Claim claim_good_iff_shelling(int d_max) {
  return timed("good-iff-shelling", "a pair sequence is good iff its orientation has the shelling property",
               [&](Claim& c) {
                 int checked = 0, exceptions = 0;
                 for (int d = 1; d <= d_max; ++d) {
                   auto lattice = crosspolytope_lattice(d);
                   for_each_pair_sequence(d, [&](const PairSequence& s) {
                     ++checked;
                     if (is_good(s) != shelling_property_exists(to_digraph(orientation_of(s), lattice)))
                       ++exceptions;
                   });
                 }
                 c.passed = exceptions == 0;
                 c.detail = std::to_string(checked) + " sequences, " + std::to_string(exceptions) + " exceptions";
               });
}

Claim claim_line_shellings(int lines) {
  return timed("line-shellings", "sampled line shellings and the two-facet start are shellings", [&](Claim& c) {
    int accepted = 0, total = 0;
    auto run = [&](const Geometry& geo, const std::string& name, std::uint64_t seed) {
      const FaceLattice lat = FaceLattice::build(verify_vh(geo, name));
      for (const DirectedLine& line : sample_generic_lines(geo, lines, seed)) {
        ++total;
        if (is_shelling(lat, line_shelling(geo.halfspaces, line)).is_shelling) ++accepted;
      }
    };
    const Geometry omega = omega_star_geometry();
    run(omega, "Omega*", 1);
    run(cube_geometry(4), "cube_4", 2);

    const FaceLattice lat = FaceLattice::build(verify_vh(omega, "Omega*"));
    const FacetOrder start = two_facet_start_shelling(omega, 0, 1);
    const FacetOrder end = two_facet_start_shelling(omega, 0, 1, true);
    const bool start_ok = start[0] == 0 && start[1] == 1 && is_shelling(lat, start).is_shelling;
    const bool end_ok = end[8] == 1 && end[9] == 0 && is_shelling(lat, end).is_shelling;
    c.passed = total == 2 * lines && accepted == total && start_ok && end_ok;
    c.detail = std::to_string(accepted) + "/" + std::to_string(total) + " line shellings accepted; F_1,F_2 start " +
               (start_ok ? "ok" : "FAILED") + ", F_2,F_1 end " + (end_ok ? "ok" : "FAILED");
  });
}

std::vector<Claim> reproduce(const ReproduceOptions& options) {
  std::vector<Claim> out;
  out.push_back(claim_verify_omega(options));
  out.push_back(claim_omega_classification());
  const auto corpus = equivalence_corpus();
  out.push_back(claim_equivalence(corpus));
  out.push_back(claim_boundary_formula(corpus));
  out.push_back(claim_preservation());
  out.push_back(claim_census());
  out.push_back(claim_bounds());
  out.push_back(claim_good_iff_shelling());
  out.push_back(claim_line_shellings());
  return out;
}

}  // namespace pdg
