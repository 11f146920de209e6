#include "pdg/crosspolytope.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "pdg/error.hpp"
#include "pdg/shelling.hpp"

namespace pdg {

void PairSequence::validate() const {
  const int d = dimension();
  if (d < 1) throw Error(ErrorKind::InvalidPairSequence, "empty pair sequence");
  std::vector<bool> used(2 * d + 1, false);
  for (int k = 0; k < d; ++k) {
    const auto [a, b] = pairs[k];
    for (int x : {a, b}) {
      if (x < 1 || x > 2 * d || used[x])
        throw Error(ErrorKind::InvalidPairSequence, to_string() + ": labels must partition {1..2d}");
      used[x] = true;
    }
    if (a >= b) throw Error(ErrorKind::InvalidPairSequence, to_string() + ": pair is not increasing");
    if (k > 0 && pairs[k - 1].first >= a)
      throw Error(ErrorKind::InvalidPairSequence, to_string() + ": first elements must increase");
  }
}

std::string PairSequence::to_string() const {
  bool compact = true;
  for (auto [a, b] : pairs) compact = compact && a < 10 && b < 10 && a >= 0 && b >= 0;
  std::string out;
  for (auto [a, b] : pairs) {
    out += "(" + std::to_string(a) + (compact ? "" : ",") + std::to_string(b) + ")";
  }
  return out;
}

PairSequence PairSequence::parse(const std::string& text) {
  PairSequence s;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorKind::InvalidPairSequence, "cannot parse '" + text + "'"); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') fail();
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail();
    std::string body = text.substr(i + 1, close - i - 1);
    std::vector<int> nums;
    if (body.find_first_of(", ") != std::string::npos) {
      std::string cur;
      for (char c : body + ",") {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) nums.push_back(std::stoi(cur));
          cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          cur += c;
        } else {
          fail();
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        nums.push_back(c - '0');
      }
    }
    if (nums.size() != 2) fail();
    s.pairs.emplace_back(nums[0], nums[1]);
    i = close + 1;
  }
  s.validate();
  return s;
}

VertexFacetIncidence crosspolytope(int d) {
  if (d < 1 || d > 6) throw Error(ErrorKind::InvalidInput, "crosspolytope dimension must be in 1..6");
  VertexFacetIncidence inc;
  inc.name = "C_" + std::to_string(d);
  for (int i = 1; i <= d; ++i) {
    inc.vertex_names.push_back("P_" + std::to_string(i));
    inc.vertex_names.push_back("P_-" + std::to_string(i));
  }
  for (int signs = 0; signs < (1 << d); ++signs) {
    VertexSet facet;
    std::string name = "[";
    for (int i = 0; i < d; ++i) {
      const bool negative = (signs >> i) & 1;
      facet.insert(2 * i + (negative ? 1 : 0));
      name += negative ? '-' : '+';
    }
    inc.facets.push_back(facet);
    inc.facet_names.push_back(name + "]");
  }
  return inc;
}

std::shared_ptr<const FaceLattice> crosspolytope_lattice(int d) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FaceLattice>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const FaceLattice>(FaceLattice::build(crosspolytope(d)));
  return slot;
}

CrossOrientation orientation_of(const PairSequence& s) {
  s.validate();
  const int d = s.dimension();
  std::vector<int> label(2 * d);
  for (int k = 0; k < d; ++k) {
    label[2 * k] = s.pairs[k].first;
    label[2 * k + 1] = s.pairs[k].second;
  }
  CrossOrientation o{d, {}};
  for (int a = 0; a < 2 * d; ++a) {
    for (int b = a + 1; b < 2 * d; ++b) {
      if (a / 2 == b / 2 && d > 1) continue;  // a segment is its own edge
      o.edges.emplace_back(label[a] < label[b] ? Edge{a, b} : Edge{b, a});
    }
  }
  return o;
}

PolytopalDigraph to_digraph(const CrossOrientation& o, std::shared_ptr<const FaceLattice> lattice) {
  return PolytopalDigraph(std::move(lattice), o.edges);
}

PolytopalDigraph to_digraph(const CrossOrientation& o) {
  return to_digraph(o, crosspolytope_lattice(o.dimension));
}

PairSequence pair_sequence_from_order(const CrossOrientation& o, const std::vector<int>& order) {
  const int d = o.dimension;
  std::vector<int> label(2 * d, 0);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i) + 1;
  for (auto [a, b] : o.edges) {
    if (label[a] >= label[b])
      throw Error(ErrorKind::InvalidInput, "vertex order is not a topological sort");
  }
  PairSequence s;
  for (int k = 0; k < d; ++k) {
    s.pairs.emplace_back(std::min(label[2 * k], label[2 * k + 1]), std::max(label[2 * k], label[2 * k + 1]));
  }
  std::sort(s.pairs.begin(), s.pairs.end());
  return s;
}

PairSequence pair_sequence_of(const CrossOrientation& o) {
  if (o.dimension < 1 || o.dimension > 6)
    throw Error(ErrorKind::InvalidInput, "crosspolytope dimension must be in 1..6");
  // Validates that the edges are exactly the skeleton.
  const PolytopalDigraph g = to_digraph(o);
  if (!is_acyclic(g).acyclic) throw Error(ErrorKind::CyclicOrientation, "orientation has a directed cycle");
  return pair_sequence_from_order(o, first_topological_sort(g));
}

bool is_good(const PairSequence& s) {
  int max_label = 0;
  for (int k = 1; k < s.dimension(); ++k) {
    max_label = std::max({max_label, s.pairs[k - 1].first, s.pairs[k - 1].second});
    if (max_label == 2 * k) return false;
  }
  return true;
}

bool has_unique_source(const PairSequence& s) { return s.pairs.front() != std::pair<int, int>{1, 2}; }

bool has_unique_sink(const PairSequence& s) {
  const int d = s.dimension();
  return s.pairs.back() != std::pair<int, int>{2 * d - 1, 2 * d};
}

void for_each_pair_sequence(int d, const std::function<void(const PairSequence&)>& visit) {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  PairSequence s;
  std::vector<bool> used(2 * d + 1, false);
  // The smallest unused label always opens the next pair.
  auto rec = [&](auto&& self) -> void {
    if (s.dimension() == d) {
      visit(s);
      return;
    }
    int first = 1;
    while (used[first]) ++first;
    used[first] = true;
    for (int second = first + 1; second <= 2 * d; ++second) {
      if (used[second]) continue;
      used[second] = true;
      s.pairs.emplace_back(first, second);
      self(self);
      s.pairs.pop_back();
      used[second] = false;
    }
    used[first] = false;
  };
  rec(rec);
}

BigInt double_factorial(int n) {
  if (n < -1 || (n >= 0 && n % 2 == 0))
    throw Error(ErrorKind::InvalidInput, "double factorial defined here for odd n >= -1");
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::vector<BigInt> good_counts_recurrence(int d_max) {
  std::vector<BigInt> a(d_max + 1, 0);
  if (d_max >= 1) a[1] = 1;
  for (int d = 2; d <= d_max; ++d) {
    BigInt value = double_factorial(2 * d - 1);
    for (int k = 1; k <= d - 1; ++k) value -= double_factorial(2 * d - 2 * k - 1) * a[k];
    a[d] = value;
  }
  return a;
}

BigInt uso_count_closed_form(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "closed form holds for d >= 2");
  const BigInt m = 2 * d - 3;
  return (m * m + 1) * double_factorial(2 * d - 5);
}

BigInt uso_count_inclusion_exclusion(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "inclusion-exclusion holds for d >= 2");
  return double_factorial(2 * d - 1) - 2 * double_factorial(2 * d - 3) + double_factorial(2 * d - 5);
}

bool CensusRow::consistent() const {
  bool ok = BigInt(total) == total_formula && BigInt(good) == good_recurrence;
  if (uso_closed_form) ok = ok && BigInt(uso) == *uso_closed_form;
  if (uso_inclusion_exclusion) ok = ok && BigInt(uso) == *uso_inclusion_exclusion;
  if (d >= 2) ok = ok && x_type == uso - good;
  if (uso_checked) ok = ok && *uso_checked == uso;
  if (hk_checked) ok = ok && *hk_checked == uso;
  if (shelling_mismatches) ok = ok && *shelling_mismatches == 0;
  return ok;
}

CensusRow census(int d, const CensusOptions& options) {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  if (d > options.enumeration_limit)
    throw Error(ErrorKind::LimitExceeded, "census enumeration limited to d <= " +
                                              std::to_string(options.enumeration_limit));
  CensusRow row;
  row.d = d;
  row.total_formula = double_factorial(2 * d - 1);
  row.good_recurrence = good_counts_recurrence(d)[d];
  if (d >= 2) {
    row.uso_closed_form = uso_count_closed_form(d);
    row.uso_inclusion_exclusion = uso_count_inclusion_exclusion(d);
  }
  // C_1 is a segment whose two vertices are adjacent, so pair sequences only model d >= 2.
  const bool check_digraphs = d >= 2 && d <= options.digraph_check_limit;
  std::shared_ptr<const FaceLattice> lattice;
  if (check_digraphs) {
    lattice = crosspolytope_lattice(d);
    row.uso_checked = 0;
    row.hk_checked = 0;
    if (options.verify_shelling) row.shelling_mismatches = 0;
  }
  for_each_pair_sequence(d, [&](const PairSequence& s) {
    ++row.total;
    const bool good = is_good(s);
    const bool uso = has_unique_source(s) && has_unique_sink(s);
    row.good += good ? 1 : 0;
    row.uso += uso ? 1 : 0;
    row.x_type += (uso && !good) ? 1 : 0;
    if (!check_digraphs) return;
    const PolytopalDigraph g = to_digraph(orientation_of(s), lattice);
    *row.uso_checked += is_uso(g).uso ? 1 : 0;
    *row.hk_checked += holt_klee(g).holt_klee ? 1 : 0;
    if (options.verify_shelling && shelling_property_exists(g) != good) ++*row.shelling_mismatches;
  });
  return row;
}

std::vector<BoundsRow> bounds_check(int d_max) {
  if (d_max < 4) throw Error(ErrorKind::InvalidInput, "bounds are stated for d >= 4");
  const std::vector<BigInt> a = good_counts_recurrence(d_max);
  std::vector<BoundsRow> rows;
  for (int d = 4; d <= d_max; ++d) {
    BoundsRow r;
    r.d = d;
    r.a = a[d];
    r.b = uso_count_closed_form(d);
    const BigInt df = double_factorial(2 * d - 3);
    r.lower = BigInt(2 * d - 4) * df;
    r.upper = BigInt(2 * d - 3) * df;
    r.excess_floor = double_factorial(2 * d - 5);
    r.lower_ok = r.lower < r.a;
    r.upper_ok = r.a < r.upper;
    r.excess_ok = r.b - r.a > r.excess_floor;
    // a/b < 1 - 1/(m^2+1) = m^2/(m^2+1), cross-multiplied
    const BigInt m2 = BigInt(2 * d - 3) * (2 * d - 3);
    r.ratio_ok = r.a * (m2 + 1) < r.b * m2;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace pdg
