#include "pdg/shelling.hpp"

#include <algorithm>
#include <unordered_set>

#include "pdg/error.hpp"

namespace pdg {

std::string_view to_string(ShellingFailure failure) {
  switch (failure) {
    case ShellingFailure::EmptyIntersection: return "EmptyIntersection";
    case ShellingFailure::NotPureCodimOne: return "NotPureCodimOne";
    case ShellingFailure::NotBeginningSegment: return "NotBeginningSegment";
  }
  return "Unknown";
}

namespace {

// Inclusion-maximal nonempty sets, in a canonical order.
std::vector<VertexSet> maximal_nonempty(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    if (s.empty()) continue;
    bool maximal = true;
    for (VertexSet o : sets) {
      if (s.proper_subset_of(o)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<FaceId> to_ids(const FaceLattice& lat, const std::vector<VertexSet>& sets) {
  std::vector<FaceId> ids;
  for (VertexSet s : sets) ids.push_back(lat.require(s));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

ShellingOracle::ShellingOracle(const FaceLattice& lattice)
    : lat_(&lattice), reach_memo_(lattice.num_faces()), complete_memo_(lattice.num_faces()) {}

int ShellingOracle::local_index(FaceId face, FaceId facet) const {
  const auto& covers = lat_->lower_covers(face);
  auto it = std::lower_bound(covers.begin(), covers.end(), facet);
  if (it == covers.end() || *it != facet) return -1;
  return static_cast<int>(it - covers.begin());
}

std::uint64_t ShellingOracle::mask_of(FaceId face, std::span<const FaceId> facets) const {
  std::uint64_t mask = 0;
  for (FaceId f : facets) {
    const int i = local_index(face, f);
    if (i < 0)
      throw Error(ErrorKind::InvalidInput,
                  lat_->describe(lat_->face(f).vertices) + " is not a facet of " +
                      lat_->describe(lat_->face(face).vertices));
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<FaceId> ShellingOracle::maximal_intersections(FaceId face,
                                                          std::span<const FaceId> prior) const {
  std::vector<VertexSet> pieces;
  const VertexSet k = lat_->face(face).vertices;
  for (FaceId h : prior) pieces.push_back(k & lat_->face(h).vertices);
  return to_ids(*lat_, maximal_nonempty(std::move(pieces)));
}

std::vector<VertexSet> ShellingOracle::maximal_pieces(FaceId face, std::uint64_t placed,
                                                      int candidate) const {
  const auto& covers = lat_->lower_covers(face);
  const VertexSet k = lat_->face(covers[candidate]).vertices;
  std::vector<VertexSet> pieces;
  VertexSet(placed).for_each([&](int i) { pieces.push_back(k & lat_->face(covers[i]).vertices); });
  return maximal_nonempty(std::move(pieces));
}

bool ShellingOracle::can_follow(FaceId face, std::uint64_t placed, int candidate) {
  if (placed == 0 || lat_->face(face).dimension <= 1) return true;
  const FaceId k = lat_->lower_covers(face)[candidate];
  const int ridge_dim = lat_->face(k).dimension - 1;
  const std::vector<VertexSet> pieces = maximal_pieces(face, placed, candidate);
  if (pieces.empty()) return false;
  std::uint64_t sub = 0;
  for (VertexSet p : pieces) {
    const FaceId id = lat_->require(p);
    if (lat_->face(id).dimension != ridge_dim) return false;
    sub |= std::uint64_t{1} << local_index(k, id);
  }
  return begins(k, sub);
}

bool ShellingOracle::begins(FaceId face, std::uint64_t set) {
  if (lat_->face(face).dimension <= 1) return set != 0;
  return reachable(face, set) && completable(face, set);
}

bool ShellingOracle::reachable(FaceId face, std::uint64_t set) {
  if (std::popcount(set) <= 1) return true;
  auto& memo = reach_memo_[face];
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  bool ok = false;
  for (std::uint64_t b = set; b != 0 && !ok; b &= b - 1) {
    const int i = std::countr_zero(b);
    const std::uint64_t rest = set & ~(std::uint64_t{1} << i);
    ok = can_follow(face, rest, i) && reachable(face, rest);
  }
  memo.emplace(set, ok);
  return ok;
}

bool ShellingOracle::completable(FaceId face, std::uint64_t set) {
  const int count = static_cast<int>(lat_->lower_covers(face).size());
  const std::uint64_t full = VertexSet::range(count).bits();
  if (set == full || lat_->face(face).dimension <= 1) return true;
  auto& memo = complete_memo_[face];
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  bool ok = false;
  for (std::uint64_t b = full & ~set; b != 0 && !ok; b &= b - 1) {
    const int i = std::countr_zero(b);
    ok = can_follow(face, set, i) && completable(face, set | (std::uint64_t{1} << i));
  }
  memo.emplace(set, ok);
  return ok;
}

bool ShellingOracle::can_begin(FaceId face, std::span<const FaceId> facets) {
  const std::uint64_t mask = mask_of(face, facets);
  if (mask == 0) return false;
  return begins(face, mask);
}

bool ShellingOracle::is_shellable(FaceId face) {
  if (lat_->face(face).dimension <= 1) return true;
  return completable(face, 0);
}

ShellingOracle::Step ShellingOracle::step(FaceId face, std::span<const FaceId> placed, FaceId candidate) {
  Step st;
  const std::uint64_t placed_mask = mask_of(face, placed);
  const std::span<const FaceId> one(&candidate, 1);
  const int cand = std::countr_zero(mask_of(face, one));
  if (placed_mask == 0 || lat_->face(face).dimension <= 1) return st;
  const std::vector<VertexSet> pieces = maximal_pieces(face, placed_mask, cand);
  st.intersection = to_ids(*lat_, pieces);
  const int ridge_dim = lat_->face(candidate).dimension - 1;
  if (pieces.empty()) {
    st.ok = false;
    st.failure = ShellingFailure::EmptyIntersection;
    return st;
  }
  for (FaceId id : st.intersection) {
    if (lat_->face(id).dimension != ridge_dim) {
      st.ok = false;
      st.failure = ShellingFailure::NotPureCodimOne;
      return st;
    }
  }
  if (!can_follow(face, placed_mask, cand)) {
    st.ok = false;
    st.failure = ShellingFailure::NotBeginningSegment;
  }
  return st;
}

ShellingVerdict ShellingOracle::check(std::span<const FaceId> facet_order) {
  const FaceId top = lat_->top();
  const auto& covers = lat_->lower_covers(top);
  const std::uint64_t mask = mask_of(top, facet_order);
  if (facet_order.size() != covers.size() || std::popcount(mask) != static_cast<int>(covers.size()))
    throw Error(ErrorKind::InvalidInput, "facet order is not a permutation of the facets");
  ShellingVerdict verdict;
  for (std::size_t j = 1; j < facet_order.size(); ++j) {
    const Step st = step(top, facet_order.subspan(0, j), facet_order[j]);
    if (!st.ok) {
      verdict.is_shelling = false;
      verdict.failing_index = static_cast<int>(j) + 1;
      verdict.failing_reason = st.failure;
      verdict.failing_intersection = st.intersection;
      return verdict;
    }
  }
  return verdict;
}

namespace {

std::vector<FaceId> facet_faces(const FaceLattice& lattice, std::span<const int> order) {
  std::vector<FaceId> out;
  for (int f : order) {
    if (f < 0 || f >= lattice.num_facets())
      throw Error(ErrorKind::InvalidInput, "facet index out of range");
    out.push_back(lattice.facet_face(f));
  }
  return out;
}

}  // namespace

std::vector<FaceId> boundary_intersection(const FaceLattice& lattice, std::span<const int> order, int j) {
  if (j < 1 || j > static_cast<int>(order.size()))
    throw Error(ErrorKind::InvalidInput, "position out of range");
  const std::vector<FaceId> faces = facet_faces(lattice, order);
  ShellingOracle oracle(lattice);
  return oracle.maximal_intersections(faces[j - 1], std::span<const FaceId>(faces).subspan(0, j - 1));
}

bool is_beginning_segment(const FaceLattice& facet_lattice, std::span<const VertexSet> ridges) {
  std::vector<FaceId> ids;
  for (VertexSet r : ridges) ids.push_back(facet_lattice.require(r));
  ShellingOracle oracle(facet_lattice);
  return oracle.can_begin(facet_lattice.top(), ids);
}

ShellingVerdict is_shelling(const FaceLattice& lattice, std::span<const int> order) {
  ShellingOracle oracle(lattice);
  return oracle.check(facet_faces(lattice, order));
}

namespace {

// Polar of the digraph's polytope, with vertex v of g mapped to the local
// index of its facet F(v) among the polar's top lower covers.
struct PolarView {
  FaceLattice polar_lattice;
  std::vector<int> local;
};

PolarView polar_view(const PolytopalDigraph& g) {
  PolarView view{polar(g.lattice()), {}};
  ShellingOracle probe(view.polar_lattice);
  for (int v = 0; v < g.num_vertices(); ++v)
    view.local.push_back(probe.local_index(view.polar_lattice.top(), view.polar_lattice.facet_face(v)));
  return view;
}

VertexSet available_vertices(const PolytopalDigraph& g, VertexSet placed) {
  VertexSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!placed.contains(v) && g.in_neighbors(v).subset_of(placed)) out.insert(v);
  }
  return out;
}

std::uint64_t local_mask(const PolarView& view, VertexSet vertices) {
  std::uint64_t m = 0;
  vertices.for_each([&](int v) { m |= std::uint64_t{1} << view.local[v]; });
  return m;
}

}  // namespace

bool shelling_property_exists(const PolytopalDigraph& g) {
  if (!is_acyclic(g).acyclic) return false;
  const PolarView view = polar_view(g);
  if (view.polar_lattice.dimension() <= 1) return true;
  ShellingOracle oracle(view.polar_lattice);
  const FaceId top = view.polar_lattice.top();
  const VertexSet all = VertexSet::range(g.num_vertices());
  std::unordered_set<VertexSet> dead;
  auto search = [&](auto&& self, VertexSet placed) -> bool {
    if (placed == all) return true;
    if (dead.contains(placed)) return false;
    bool found = false;
    available_vertices(g, placed).for_each([&](int v) {
      if (found) return;
      if (!oracle.can_follow(top, local_mask(view, placed), view.local[v])) return;
      VertexSet next = placed;
      next.insert(v);
      found = self(self, next);
    });
    if (!found) dead.insert(placed);
    return found;
  };
  return search(search, VertexSet());
}

ShellingAllResult shelling_property_all(const PolytopalDigraph& g, bool audit,
                                        std::uint64_t enumeration_cap) {
  ShellingAllResult result;
  if (!is_acyclic(g).acyclic) {
    result.holds = false;
    return result;
  }
  const PolarView view = polar_view(g);
  ShellingOracle oracle(view.polar_lattice);
  const FaceLattice& lat = view.polar_lattice;
  auto check_order = [&](const std::vector<int>& order) {
    std::vector<FaceId> facets;
    for (int v : order) facets.push_back(lat.facet_face(v));
    return oracle.check(facets);
  };

  if (!audit || count_topological_sorts(g, enumeration_cap) <= enumeration_cap) {
    result.enumerated = true;
    TopologicalSorts sorts(g);
    while (auto order = sorts.next()) {
      ++result.orders_checked;
      const ShellingVerdict verdict = check_order(*order);
      if (!verdict.is_shelling) {
        result.holds = false;
        result.counterexample.assign(order->begin(), order->begin() + *verdict.failing_index);
        return result;
      }
      if (!audit) break;
    }
    return result;
  }

  // Too many sorts: every reachable prefix set must accept every available vertex.
  const FaceId top = lat.top();
  if (lat.dimension() <= 1) return result;
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> stack{VertexSet()};
  seen.insert(VertexSet());
  while (!stack.empty()) {
    const VertexSet placed = stack.back();
    stack.pop_back();
    ++result.orders_checked;
    bool failed = false;
    available_vertices(g, placed).for_each([&](int v) {
      if (failed) return;
      if (!oracle.can_follow(top, local_mask(view, placed), view.local[v])) {
        failed = true;
        result.holds = false;
        result.counterexample = placed.members();
        result.counterexample.push_back(v);
        return;
      }
      VertexSet next = placed;
      next.insert(v);
      if (seen.insert(next).second) stack.push_back(next);
    });
    if (failed) return result;
  }
  return result;
}

BoundaryFormulaResult boundary_formula_check(const PolytopalDigraph& g, std::uint64_t max_sorts) {
  if (!is_acyclic(g).acyclic || !is_uso(g).uso)
    throw Error(ErrorKind::NotAcyclicUSO, "boundary formula needs an acyclic unique sink orientation");
  const FaceLattice dual = polar(g.lattice());
  auto facet_of = [&](int v) { return dual.face(dual.facet_face(v)).vertices; };
  BoundaryFormulaResult result;
  TopologicalSorts sorts(g);
  for (std::uint64_t s = 0; s < max_sorts; ++s) {
    auto order = sorts.next();
    if (!order) break;
    for (std::size_t k = 0; k < order->size(); ++k) {
      const int vk = (*order)[k];
      const VertexSet fk = facet_of(vk);
      std::vector<VertexSet> earlier, along_edges;
      for (std::size_t i = 0; i < k; ++i) earlier.push_back(fk & facet_of((*order)[i]));
      g.in_neighbors(vk).for_each([&](int vj) { along_edges.push_back(fk & facet_of(vj)); });
      if (maximal_nonempty(earlier) != maximal_nonempty(along_edges)) {
        result.holds = false;
        result.failing_position = static_cast<int>(k) + 1;
        result.order = *order;
        return result;
      }
    }
    result.order = *order;
  }
  return result;
}

}  // namespace pdg
