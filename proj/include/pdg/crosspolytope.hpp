#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "pdg/digraph.hpp"

namespace pdg {

using BigInt = boost::multiprecision::mpz_int;

/// (L_1 L_2)...(L_{2d-1} L_{2d}): pair k holds the labels of P_k and P_{-k}.
struct PairSequence {
  std::vector<std::pair<int, int>> pairs;

  int dimension() const { return static_cast<int>(pairs.size()); }
  /// Throws Error(InvalidPairSequence) unless the labels partition {1..2d},
  /// first elements increase and each pair is increasing.
  void validate() const;
  /// "(13)(24)" when every label is a single digit, "(1,3)(2,4)" otherwise.
  std::string to_string() const;
  static PairSequence parse(const std::string& text);

  bool operator==(const PairSequence&) const = default;
};

/// Acyclic orientation of the crosspolytope skeleton. Vertex 2(i-1) is P_i and
/// vertex 2(i-1)+1 is P_{-i}.
struct CrossOrientation {
  int dimension = 0;
  std::vector<Edge> edges;
};

/// 2d vertices P_1, P_-1, ..., and 2^d simplex facets, one per sign vector.
/// Supports 1 <= d <= 6.
VertexFacetIncidence crosspolytope(int d);
std::shared_ptr<const FaceLattice> crosspolytope_lattice(int d);

/// Canonical orientation: P_k takes the smaller label of pair k, and every edge
/// runs from the smaller label to the larger.
CrossOrientation orientation_of(const PairSequence& s);
PolytopalDigraph to_digraph(const CrossOrientation& o);
PolytopalDigraph to_digraph(const CrossOrientation& o, std::shared_ptr<const FaceLattice> lattice);

/// Labels vertices along the least topological sort and reads off the pairs.
/// Throws Error(CyclicOrientation) for cyclic input and Error(InvalidInput) if
/// the edges are not the crosspolytope skeleton.
PairSequence pair_sequence_of(const CrossOrientation& o);
/// Same, but labels along the given vertex order (which must be a topological sort).
PairSequence pair_sequence_from_order(const CrossOrientation& o, const std::vector<int>& order);

/// No proper prefix of k pairs uses exactly the labels {1..2k}.
bool is_good(const PairSequence& s);
/// Unique source iff (L_1,L_2) != (1,2); unique sink iff the last pair is not (2d-1,2d).
bool has_unique_source(const PairSequence& s);
bool has_unique_sink(const PairSequence& s);

/// Calls `visit` on every pair sequence of dimension d in lexicographic order.
void for_each_pair_sequence(int d, const std::function<void(const PairSequence&)>& visit);

/// n!! for odd n >= -1, with (-1)!! = 1.
BigInt double_factorial(int n);
/// a_d through a_{d_max} by the recurrence a_d = (2d-1)!! - sum_k (2d-2k-1)!! a_k.
std::vector<BigInt> good_counts_recurrence(int d_max);
/// b_d = ((2d-3)^2 + 1)(2d-5)!!, d >= 2.
BigInt uso_count_closed_form(int d);
/// (2d-1)!! - 2(2d-3)!! + (2d-5)!!, d >= 2.
BigInt uso_count_inclusion_exclusion(int d);

struct CensusOptions {
  int enumeration_limit = 6;
  int digraph_check_limit = 4;  // run is_uso and holt_klee on every orientation up to this d
  bool verify_shelling = false;  // also compare is_good with shelling_property_exists
};

struct CensusRow {
  int d = 0;
  std::uint64_t total = 0;
  std::uint64_t good = 0;           // by enumeration
  std::uint64_t uso = 0;            // unique source and sink, by the pair criteria
  std::uint64_t x_type = 0;         // uso and not good
  BigInt total_formula;             // (2d-1)!!
  BigInt good_recurrence;           // a_d
  std::optional<BigInt> uso_closed_form;            // b_d, d >= 2
  std::optional<BigInt> uso_inclusion_exclusion;    // d >= 2
  std::optional<std::uint64_t> uso_checked;  // is_uso on the digraph
  std::optional<std::uint64_t> hk_checked;   // holt_klee on the digraph
  std::optional<std::uint64_t> shelling_mismatches;  // is_good vs shelling property

  /// Every available count agrees with its independent route.
  bool consistent() const;
};

/// Throws Error(LimitExceeded) if d > options.enumeration_limit.
CensusRow census(int d, const CensusOptions& options = {});

struct BoundsRow {
  int d = 0;
  BigInt a;
  BigInt b;
  BigInt lower;    // (2d-4)(2d-3)!!
  BigInt upper;    // (2d-3)(2d-3)!!
  BigInt excess_floor;  // (2d-5)!!
  bool lower_ok = false;
  bool upper_ok = false;
  bool excess_ok = false;  // b_d - a_d > (2d-5)!!
  bool ratio_ok = false;   // a_d / b_d < 1 - 1/((2d-3)^2 + 1)
  bool ok() const { return lower_ok && upper_ok && excess_ok && ratio_ok; }
};

/// Rows for 4 <= d <= d_max, all exact. Throws Error(InvalidInput) if d_max < 4.
std::vector<BoundsRow> bounds_check(int d_max);

}  // namespace pdg
