// pdg: command-line front end for the polytopal digraph toolkit.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdg/claims.hpp"
#include "pdg/classify.hpp"
#include "pdg/constructions.hpp"
#include "pdg/crosspolytope.hpp"
#include "pdg/datasets.hpp"
#include "pdg/error.hpp"
#include "pdg/geometry.hpp"
#include "pdg/io.hpp"
#include "pdg/shelling.hpp"

namespace fs = std::filesystem;
using namespace pdg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitClaim = 3;

void print_error(std::string_view kind, std::string_view message) {
  Json doc{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << doc.dump() << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// A polytope reference is a JSON file path or a built-in dataset name.
Dataset load_polytope(const std::string& ref, const fs::path& relative_to = {}) {
  fs::path path(ref);
  if (!relative_to.empty() && path.is_relative() && fs::exists(relative_to / path)) path = relative_to / path;
  if (fs::exists(path)) {
    Dataset ds;
    ds.polytope = polytope_from_json(read_json_file(path.string()));
    ds.name = ds.polytope.name;
    return ds;
  }
  return load_dataset(ref);
}

PolytopalDigraph digraph_of(const Dataset& ds) {
  auto lattice = std::make_shared<const FaceLattice>(FaceLattice::build(ds.polytope));
  if (ds.orientation) return PolytopalDigraph(lattice, *ds.orientation);
  return index_orientation(lattice);
}

// Resolves `--dataset NAME`, `ORIENTATION.json` (polytope taken from its
// "polytope" field) or `POLYTOPE ORIENTATION.json`.
PolytopalDigraph load_digraph(const std::string& dataset, const std::vector<std::string>& inputs) {
  if (!dataset.empty()) {
    if (!inputs.empty()) throw Error(ErrorKind::InvalidInput, "give either --dataset or input files, not both");
    return digraph_of(load_dataset(dataset));
  }
  if (inputs.empty() || inputs.size() > 2)
    throw Error(ErrorKind::InvalidInput, "expected ORIENTATION.json or POLYTOPE ORIENTATION.json");
  const std::string& orientation_path = inputs.back();
  const OrientationDoc doc = orientation_from_json(read_json_file(orientation_path));
  Dataset ds;
  if (inputs.size() == 2) {
    ds = load_polytope(inputs[0]);
  } else {
    if (doc.polytope.empty()) throw Error(ErrorKind::InvalidInput, "orientation does not name its polytope");
    ds = load_polytope(doc.polytope, fs::path(orientation_path).parent_path());
  }
  ds.orientation = doc.edges;
  return digraph_of(ds);
}

void emit_dot(const std::string& target, const PolytopalDigraph& g) {
  if (target.empty()) return;
  if (target == "-") {
    std::cout << to_dot(g);
    return;
  }
  std::ofstream out(target);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + target);
  out << to_dot(g);
}

Geometry load_geometry(const std::string& dataset, const std::string& file) {
  if (!file.empty()) return geometry_from_json(read_json_file(file));
  Dataset ds = load_dataset(dataset.empty() ? "omega-star" : dataset);
  if (!ds.geometry) throw Error(ErrorKind::InvalidInput, "dataset '" + ds.name + "' has no coordinates");
  return *ds.geometry;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_rational(item));
  return out;
}

std::string facet_names(const Geometry& geo, const FacetOrder& order) {
  std::string s;
  for (int f : order) s += (s.empty() ? "" : ",") + (f < static_cast<int>(geo.facet_names.size()) ? geo.facet_names[f] : "F_" + std::to_string(f + 1));
  return s;
}

Json claims_to_json(const std::vector<Claim>& claims, bool timings) {
  Json out = Json::array();
  for (const Claim& c : claims) {
    Json row{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}};
    if (timings) row["seconds"] = c.seconds;
    out.push_back(std::move(row));
  }
  return out;
}

void print_claims(const std::vector<Claim>& claims, bool timings) {
  for (const Claim& c : claims) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.id << ": " << c.statement << "\n      " << c.detail;
    if (timings) std::cout << " [" << c.seconds << " s]";
    std::cout << "\n";
  }
}

bool all_passed(const std::vector<Claim>& claims) {
  for (const Claim& c : claims) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polytopal digraph toolkit: LP digraph properties, X-type constructions, crosspolytope census"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  // check
  auto* check = app.add_subcommand("check", "Classify a polytopal digraph (acyclic, USO, Holt-Klee, shelling)");
  std::string check_dataset, check_dot;
  std::vector<std::string> check_inputs;
  bool expect_x_type = false;
  check->add_option("inputs", check_inputs, "ORIENTATION.json, or POLYTOPE ORIENTATION.json");
  check->add_option("--dataset", check_dataset, "Built-in dataset: omega, omega-star, simplex-<d>, cross-<d>, cube-<d>");
  check->add_option("--dot", check_dot, "Write the digraph in Graphviz format (- for stdout)");
  check->add_flag("--expect-x-type", expect_x_type, "Exit 3 unless the digraph is X-type");

  // shelling-check
  auto* shell = app.add_subcommand("shelling-check", "Check whether a facet order is a shelling");
  std::string shell_polytope, shell_order;
  bool expect_shelling = false;
  shell->add_option("polytope", shell_polytope, "POLYTOPE.json or dataset name")->required();
  shell->add_option("--order", shell_order, "Facet names in order, comma separated")->required();
  shell->add_flag("--expect-shelling", expect_shelling, "Exit 3 unless the order is a shelling");

  // shelling-property
  auto* prop = app.add_subcommand("shelling-property", "Decide the shelling property of a digraph");
  std::string prop_dataset;
  std::vector<std::string> prop_inputs;
  bool audit = false;
  prop->add_option("inputs", prop_inputs, "ORIENTATION.json, or POLYTOPE ORIENTATION.json");
  prop->add_option("--dataset", prop_dataset, "Built-in dataset");
  prop->add_flag("--audit", audit, "Check every topological sort, not just one");

  // family
  auto* fam = app.add_subcommand("family", "Truncate and pyramid a base X-type graph to d dimensions and n vertices");
  std::string fam_base = "omega", fam_out;
  int fam_dim = 4, fam_vertices = 0;
  fam->add_option("--base", fam_base, "Dataset name or orientation file of a 4-polytope digraph")->capture_default_str();
  fam->add_option("--dim", fam_dim, "Target dimension d >= 4")->required();
  fam->add_option("--vertices", fam_vertices, "Target number of vertices n")->required();
  fam->add_option("--out", fam_out, "Write PREFIX.polytope.json and PREFIX.orientation.json");
  std::string fam_dot;
  fam->add_option("--dot", fam_dot, "Write the result in Graphviz format (- for stdout)");

  // xcensus
  auto* xc = app.add_subcommand("xcensus", "Count crosspolytope orientations by pair sequences");
  int xc_dmax = 6;
  bool full_hk = false;
  xc->add_option("--dmax", xc_dmax, "Largest dimension")->capture_default_str()->check(CLI::Range(1, 60));
  xc->add_flag("--full-hk", full_hk, "Also run the USO and Holt-Klee checks on every orientation with d <= 6");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Check the bounds on a_d and b_d exactly");
  int bnd_dmax = 8;
  bnd->add_option("--dmax", bnd_dmax, "Largest dimension")->capture_default_str()->check(CLI::Range(4, 500));

  // line-shelling
  auto* line = app.add_subcommand("line-shelling", "Line shellings of a polytope given by coordinates and inequalities");
  std::string line_dataset, line_geometry, line_point, line_direction, line_start;
  int line_sample = 0;
  std::uint64_t line_seed = 1;
  bool line_reversed = false;
  line->add_option("geometry", line_geometry, "GEOMETRY.json (defaults to the omega-star dataset)");
  line->add_option("--dataset", line_dataset, "Dataset with coordinates: omega-star or cube-<d>");
  line->add_option("--point", line_point, "Interior base point, comma separated rationals");
  line->add_option("--direction", line_direction, "Direction, comma separated rationals");
  line->add_option("--sample", line_sample, "Number of sampled generic lines");
  line->add_option("--seed", line_seed, "Seed for --sample")->capture_default_str();
  line->add_option("--start", line_start, "Two adjacent facets H1,H2 to start the shelling with");
  line->add_flag("--reversed", line_reversed, "With --start, end the shelling with H2,H1 instead");

  // verify-omega
  auto* ver = app.add_subcommand("verify-omega", "Check the coordinates and facet inequalities of Omega*");
  std::string ver_geometry;
  ver->add_option("--geometry", ver_geometry, "Use this geometry file instead of the embedded tables");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Run every checkable claim and report pass/fail");
  std::string rep_geometry;
  bool timings = false;
  rep->add_option("--omega-geometry", rep_geometry, "Replace the embedded Omega* tables (negative control)");
  rep->add_flag("--timings", timings, "Show the runtime of each claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("UsageError", e.what());
    return kExitInvalid;
  }

  try {
    if (check->parsed()) {
      const PolytopalDigraph g = load_digraph(check_dataset, check_inputs);
      const PropertyReport r = classify(g);
      if (json) {
        std::cout << report_to_json(g, r).dump(2) << "\n";
      } else {
        std::cout << report_to_text(g, r);
      }
      emit_dot(check_dot, g);
      return expect_x_type && !r.x_type ? kExitClaim : kExitOk;
    }

    if (shell->parsed()) {
      const Dataset ds = load_polytope(shell_polytope);
      const FaceLattice lat = FaceLattice::build(ds.polytope);
      std::vector<int> order;
      for (const std::string& name : split_list(shell_order)) {
        const int f = ds.polytope.facet_index(name);
        if (f < 0) throw Error(ErrorKind::InvalidInput, "unknown facet '" + name + "'");
        order.push_back(f);
      }
      const ShellingVerdict v = is_shelling(lat, order);
      std::vector<std::vector<std::string>> pieces;
      for (FaceId id : v.failing_intersection) pieces.push_back(lat.names_of(lat.face(id).vertices));
      if (json) {
        Json doc{{"is_shelling", v.is_shelling}};
        if (v.failing_index) {
          doc["failing_index"] = *v.failing_index;
          doc["failing_reason"] = std::string(to_string(*v.failing_reason));
          doc["intersection"] = pieces;
        }
        std::cout << doc.dump(2) << "\n";
      } else if (v.is_shelling) {
        std::cout << "shelling: yes\n";
      } else {
        std::cout << "shelling: no\nfails at position " << *v.failing_index << " ("
                  << to_string(*v.failing_reason) << "); intersection:";
        for (const auto& piece : pieces) {
          std::string s;
          for (const auto& n : piece) s += (s.empty() ? "" : ",") + n;
          std::cout << " {" << s << "}";
        }
        std::cout << "\n";
      }
      return expect_shelling && !v.is_shelling ? kExitClaim : kExitOk;
    }

    if (prop->parsed()) {
      const PolytopalDigraph g = load_digraph(prop_dataset, prop_inputs);
      if (!is_acyclic(g).acyclic) throw Error(ErrorKind::CyclicInput, "the shelling property needs an acyclic digraph");
      const bool exists = shelling_property_exists(g);
      const ShellingAllResult all = shelling_property_all(g, audit);
      const auto& names = g.lattice().incidence().vertex_names;
      std::vector<std::string> counter;
      for (int v : all.counterexample) counter.push_back(names[v]);
      if (json) {
        Json doc{{"exists", exists}, {"all", all.holds}, {"audit", audit}, {"orders_checked", all.orders_checked},
                 {"enumerated", all.enumerated}};
        if (!all.holds) doc["counterexample_prefix"] = counter;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "some topological sort is a shelling: " << (exists ? "yes" : "no") << "\n";
        std::cout << (audit ? "every" : "first") << " topological sort is a shelling: " << (all.holds ? "yes" : "no");
        std::cout << " (" << all.orders_checked << (all.enumerated ? " sorts" : " prefix sets") << " checked)\n";
        if (!all.holds) {
          std::string s;
          for (const auto& n : counter) s += (s.empty() ? "" : ",") + n;
          std::cout << "failing prefix: " << s << "\n";
        }
      }
      return kExitOk;
    }

    if (fam->parsed()) {
      const PolytopalDigraph base = fs::exists(fam_base) ? load_digraph("", {fam_base}) : load_digraph(fam_base, {});
      const FamilyResult result = family(base, FamilySpec{fam_dim, fam_vertices});
      const PropertyReport r = classify(result.digraph);
      if (!fam_out.empty()) {
        const std::string polytope_file = fam_out + ".polytope.json";
        write_json_file(polytope_file, polytope_to_json(result.digraph.lattice().incidence()));
        write_json_file(fam_out + ".orientation.json",
                        orientation_to_json(result.digraph, fs::path(polytope_file).filename().string()));
      }
      if (json) {
        Json steps = Json::array();
        for (const FamilyStep& s : result.steps) {
          Json step{{"operation", s.operation}, {"vertices", s.num_vertices}, {"facets", s.num_facets},
                    {"dimension", s.dimension}};
          if (s.truncation) step["at"] = *s.truncation;
          steps.push_back(std::move(step));
        }
        std::cout << Json{{"steps", std::move(steps)}, {"report", report_to_json(result.digraph, r)}}.dump(2) << "\n";
      } else {
        for (const FamilyStep& s : result.steps) {
          std::cout << s.operation;
          if (s.truncation) {
            const auto& t = *s.truncation;
            std::cout << " at " << t[0] << " (v1..v4 = " << t[1] << "," << t[2] << "," << t[3] << "," << t[4] << ")";
          }
          std::cout << " -> dimension " << s.dimension << ", " << s.num_vertices << " vertices, " << s.num_facets
                    << " facets\n";
        }
        std::cout << report_to_text(result.digraph, r);
      }
      emit_dot(fam_dot, result.digraph);
      return kExitOk;
    }

    if (xc->parsed()) {
      CensusOptions options;
      options.digraph_check_limit = full_hk ? 6 : 4;
      const std::vector<BigInt> a = good_counts_recurrence(xc_dmax);
      Json rows = Json::array();
      bool ok = true;
      if (!json) std::cout << "d\ttotal\ta_d\tb_d\tx_type\tbounds\n";
      for (int d = 1; d <= xc_dmax; ++d) {
        BigInt total = double_factorial(2 * d - 1), good = a[d], uso, x_type;
        bool consistent = true;
        std::optional<std::uint64_t> uso_checked, hk_checked;
        if (d <= options.enumeration_limit) {
          const CensusRow row = census(d, options);
          consistent = row.consistent();
          good = row.good;
          uso = row.uso;
          x_type = row.x_type;
          uso_checked = row.uso_checked;
          hk_checked = row.hk_checked;
        } else {
          uso = uso_count_closed_form(d);
          consistent = uso == uso_count_inclusion_exclusion(d);
          x_type = uso - good;
        }
        std::string bounds = "-";
        if (d >= 4) bounds = bounds_check(d).back().ok() ? "pass" : "FAIL";
        ok = ok && consistent && bounds != "FAIL";
        if (json) {
          Json row{{"d", d}, {"total", total.str()}, {"a_d", good.str()}, {"b_d", uso.str()},
                   {"x_type", x_type.str()}, {"bounds", bounds}, {"consistent", consistent}};
          if (uso_checked) row["uso_checked"] = *uso_checked;
          if (hk_checked) row["hk_checked"] = *hk_checked;
          rows.push_back(std::move(row));
        } else {
          std::cout << d << "\t" << total << "\t" << good << "\t" << uso << "\t" << x_type << "\t" << bounds
                    << (consistent ? "" : "\tINCONSISTENT") << "\n";
        }
      }
      if (json) std::cout << rows.dump(2) << "\n";
      return ok ? kExitOk : kExitClaim;
    }

    if (bnd->parsed()) {
      const auto rows = bounds_check(bnd_dmax);
      bool ok = true;
      Json out = Json::array();
      if (!json) std::cout << "d\ta_d\tb_d\tlower\tupper\tb-a>floor\tratio\n";
      for (const BoundsRow& r : rows) {
        ok = ok && r.ok();
        if (json) {
          out.push_back({{"d", r.d}, {"a_d", r.a.str()}, {"b_d", r.b.str()}, {"lower", r.lower.str()},
                         {"upper", r.upper.str()}, {"lower_ok", r.lower_ok}, {"upper_ok", r.upper_ok},
                         {"excess_ok", r.excess_ok}, {"ratio_ok", r.ratio_ok}});
        } else {
          auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
          std::cout << r.d << "\t" << r.a << "\t" << r.b << "\t" << mark(r.lower_ok) << "\t" << mark(r.upper_ok)
                    << "\t" << mark(r.excess_ok) << "\t" << mark(r.ratio_ok) << "\n";
        }
      }
      if (json) std::cout << out.dump(2) << "\n";
      return ok ? kExitOk : kExitClaim;
    }

    if (line->parsed()) {
      const Geometry geo = load_geometry(line_dataset, line_geometry);
      const FaceLattice lat = FaceLattice::build(verify_vh(geo));
      std::vector<FacetOrder> orders;
      if (!line_start.empty()) {
        const auto names = split_list(line_start);
        if (names.size() != 2) throw Error(ErrorKind::InvalidInput, "--start needs exactly two facets");
        std::vector<int> ids;
        for (const auto& n : names) {
          const auto it = std::find(geo.facet_names.begin(), geo.facet_names.end(), n);
          if (it == geo.facet_names.end()) throw Error(ErrorKind::InvalidInput, "unknown facet '" + n + "'");
          ids.push_back(static_cast<int>(it - geo.facet_names.begin()));
        }
        orders.push_back(two_facet_start_shelling(geo, ids[0], ids[1], line_reversed));
      } else if (line_sample > 0) {
        for (const DirectedLine& l : sample_generic_lines(geo, line_sample, line_seed))
          orders.push_back(line_shelling(geo.halfspaces, l));
      } else {
        if (line_point.empty() || line_direction.empty())
          throw Error(ErrorKind::InvalidInput, "give --point and --direction, --sample N, or --start H1,H2");
        DirectedLine l{RationalPoint{parse_vector(line_point)}, parse_vector(line_direction)};
        orders.push_back(line_shelling(geo.halfspaces, l));
      }
      bool ok = true;
      Json out = Json::array();
      for (const FacetOrder& order : orders) {
        const bool accepted = is_shelling(lat, order).is_shelling;
        ok = ok && accepted;
        if (json) {
          out.push_back({{"order", split_list(facet_names(geo, order))}, {"is_shelling", accepted}});
        } else {
          std::cout << facet_names(geo, order) << "\t" << (accepted ? "shelling" : "NOT a shelling") << "\n";
        }
      }
      if (json) std::cout << out.dump(2) << "\n";
      return ok ? kExitOk : kExitClaim;
    }

    if (ver->parsed()) {
      ReproduceOptions options;
      if (!ver_geometry.empty()) options.omega_geometry = geometry_from_json(read_json_file(ver_geometry));
      const Claim c = claim_verify_omega(options);
      if (json) {
        std::cout << claims_to_json({c}, false).dump(2) << "\n";
      } else {
        print_claims({c}, false);
        if (c.passed) {
          const VertexFacetIncidence inc = omega_star_incidence();
          for (int f = 0; f < inc.num_facets(); ++f) {
            std::string s;
            inc.facets[f].for_each([&](int v) { s += (s.empty() ? "" : ", ") + inc.vertex_names[v]; });
            std::cout << "      " << inc.facet_names[f] << "\t" << s << "\n";
          }
        }
      }
      return c.passed ? kExitOk : kExitClaim;
    }

    if (rep->parsed()) {
      ReproduceOptions options;
      if (!rep_geometry.empty()) options.omega_geometry = geometry_from_json(read_json_file(rep_geometry));
      const std::vector<Claim> claims = reproduce(options);
      if (json) {
        std::cout << claims_to_json(claims, timings).dump(2) << "\n";
      } else {
        print_claims(claims, timings);
      }
      return all_passed(claims) ? kExitOk : kExitClaim;
    }
  } catch (const Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    print_error(to_string(e.kind()), message);
    return kExitInvalid;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return kExitInvalid;
  }
  return kExitOk;
}
