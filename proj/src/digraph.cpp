#include "pdg/digraph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "pdg/error.hpp"

namespace pdg {

PolytopalDigraph::PolytopalDigraph(std::shared_ptr<const FaceLattice> lattice, std::vector<Edge> edges)
    : lattice_(std::move(lattice)), edges_(std::move(edges)) {
  const int n = lattice_->num_vertices();
  out_.assign(n, VertexSet());
  in_.assign(n, VertexSet());
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error(ErrorKind::InvalidInput, "edge index out of range");
    if (out_[u].contains(v) || out_[v].contains(u))
      throw Error(ErrorKind::InvalidInput, "edge " + lattice_->incidence().vertex_names[u] + "-" +
                                               lattice_->incidence().vertex_names[v] +
                                               " oriented more than once");
    out_[u].insert(v);
    in_[v].insert(u);
  }
  const Skeleton sk = skeleton(*lattice_);
  if (sk.edges.size() != edges_.size())
    throw Error(ErrorKind::InvalidInput, "orientation has " + std::to_string(edges_.size()) +
                                             " edges but the skeleton has " +
                                             std::to_string(sk.edges.size()));
  for (auto [a, b] : sk.edges) {
    if (!out_[a].contains(b) && !out_[b].contains(a))
      throw Error(ErrorKind::InvalidInput, "skeleton edge " + lattice_->incidence().vertex_names[a] +
                                               "-" + lattice_->incidence().vertex_names[b] +
                                               " is not oriented");
  }
}

bool PolytopalDigraph::has_path(int from, int to) const {
  VertexSet reached = out_[from];
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= out_[v]; });
    frontier = next - reached;
    reached |= next;
  }
  return reached.contains(to);
}

PolytopalDigraph index_orientation(std::shared_ptr<const FaceLattice> lattice) {
  std::vector<Edge> edges;
  for (auto [a, b] : skeleton(*lattice).edges) edges.emplace_back(a, b);
  return PolytopalDigraph(std::move(lattice), std::move(edges));
}

PolytopalDigraph ranked_orientation(std::shared_ptr<const FaceLattice> lattice,
                                    const std::vector<long long>& rank) {
  if (static_cast<int>(rank.size()) != lattice->num_vertices())
    throw Error(ErrorKind::InvalidInput, "rank vector size mismatch");
  std::vector<Edge> edges;
  for (auto [a, b] : skeleton(*lattice).edges) {
    if (rank[a] == rank[b]) throw Error(ErrorKind::InvalidInput, "rank ties along an edge");
    edges.emplace_back(rank[a] < rank[b] ? Edge{a, b} : Edge{b, a});
  }
  return PolytopalDigraph(std::move(lattice), std::move(edges));
}

AcyclicityResult is_acyclic(const PolytopalDigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, 0);
  AcyclicityResult result;
  // iterative DFS; on a back edge u -> v, the cycle is v ... u
  for (int root = 0; root < n && result.acyclic; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, VertexSet>> stack;
    stack.emplace_back(root, g.out_neighbors(root));
    color[root] = 1;
    while (!stack.empty() && result.acyclic) {
      auto& [u, rest] = stack.back();
      if (rest.empty()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const int v = rest.first();
      rest.erase(v);
      if (color[v] == 1) {
        result.acyclic = false;
        for (auto it = stack.begin(); it != stack.end(); ++it) {
          if (it->first == v) {
            for (auto jt = it; jt != stack.end(); ++jt) result.cycle.push_back(jt->first);
            break;
          }
        }
      } else if (color[v] == 0) {
        color[v] = 1;
        stack.emplace_back(v, g.out_neighbors(v));
      }
    }
  }
  return result;
}

namespace {

VertexSet available(const PolytopalDigraph& g, VertexSet placed) {
  VertexSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!placed.contains(v) && g.in_neighbors(v).subset_of(placed)) out.insert(v);
  }
  return out;
}

}  // namespace

TopologicalSorts::TopologicalSorts(const PolytopalDigraph& g) : g_(&g) {
  if (!is_acyclic(g).acyclic) throw Error(ErrorKind::CyclicInput, "digraph has a directed cycle");
}

bool TopologicalSorts::advance_from(std::size_t depth) {
  order_.resize(depth);
  while (static_cast<int>(order_.size()) < g_->num_vertices()) {
    const VertexSet avail = available(*g_, placed_);
    if (avail.empty()) return false;
    const int v = avail.first();
    order_.push_back(v);
    placed_.insert(v);
  }
  return true;
}

std::optional<std::vector<int>> TopologicalSorts::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    advance_from(0);
    return order_;
  }
  while (!order_.empty()) {
    const int last = order_.back();
    order_.pop_back();
    placed_.erase(last);
    const VertexSet avail = available(*g_, placed_);
    const VertexSet larger = avail - VertexSet::range(last + 1);
    if (!larger.empty()) {
      const int v = larger.first();
      order_.push_back(v);
      placed_.insert(v);
      advance_from(order_.size());
      return order_;
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<int> first_topological_sort(const PolytopalDigraph& g) {
  TopologicalSorts sorts(g);
  return *sorts.next();
}

std::uint64_t count_topological_sorts(const PolytopalDigraph& g, std::uint64_t cap) {
  if (!is_acyclic(g).acyclic) throw Error(ErrorKind::CyclicInput, "digraph has a directed cycle");
  const VertexSet all = VertexSet::range(g.num_vertices());
  std::unordered_map<VertexSet, std::uint64_t> memo;
  auto count = [&](auto&& self, VertexSet placed) -> std::uint64_t {
    if (placed == all) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    available(g, placed).for_each([&](int v) {
      VertexSet next = placed;
      next.insert(v);
      total = std::min(cap + 1, total + self(self, next));
    });
    memo.emplace(placed, total);
    return total;
  };
  return count(count, VertexSet());
}

SourcesSinks face_sources_sinks(const PolytopalDigraph& g, VertexSet face) {
  SourcesSinks r;
  face.for_each([&](int v) {
    if ((g.in_neighbors(v) & face).empty()) r.sources.insert(v);
    if ((g.out_neighbors(v) & face).empty()) r.sinks.insert(v);
  });
  return r;
}

SourcesSinks face_sources_sinks(const PolytopalDigraph& g, FaceId face) {
  if (face < 0 || face >= g.lattice().num_faces())
    throw Error(ErrorKind::FaceNotFound, "face id out of range");
  return face_sources_sinks(g, g.lattice().face(face).vertices);
}

UsoResult is_uso(const PolytopalDigraph& g) {
  const FaceLattice& lat = g.lattice();
  for (int dim = 1; dim <= lat.dimension(); ++dim) {
    for (FaceId id : lat.faces_of_dimension(dim)) {
      const SourcesSinks ss = face_sources_sinks(g, lat.face(id).vertices);
      if (ss.sources.size() != 1 || ss.sinks.size() != 1) return UsoResult{false, id};
    }
  }
  return {};
}

int max_disjoint_paths(const PolytopalDigraph& g, VertexSet within, int source, int sink) {
  if (source == sink) return 0;
  // node 2v = entry of v, 2v + 1 = exit of v
  const int n = g.num_vertices();
  const int nodes = 2 * n;
  const int big = n + 1;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  within.for_each([&](int v) {
    at(2 * v, 2 * v + 1) = (v == source || v == sink) ? big : 1;
    (g.out_neighbors(v) & within).for_each([&](int w) { at(2 * v + 1, 2 * w) = 1; });
  });
  const int s = 2 * source + 1;
  const int t = 2 * sink;
  int flow = 0;
  std::vector<int> prev(nodes);
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[t] < 0) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (prev[b] < 0 && at(a, b) > 0) {
          prev[b] = a;
          q.push(b);
        }
      }
    }
    if (prev[t] < 0) break;
    for (int b = t; b != s; b = prev[b]) {
      at(prev[b], b) -= 1;
      at(b, prev[b]) += 1;
    }
    ++flow;
  }
  return flow;
}

HoltKleeResult holt_klee(const PolytopalDigraph& g) {
  HoltKleeResult r;
  const UsoResult uso = is_uso(g);
  if (!uso.uso) {
    r.holt_klee = false;
    r.uso_failed = true;
    r.witness = uso.witness;
    return r;
  }
  const FaceLattice& lat = g.lattice();
  for (int dim = 2; dim <= lat.dimension(); ++dim) {
    for (FaceId id : lat.faces_of_dimension(dim)) {
      const VertexSet face = lat.face(id).vertices;
      const SourcesSinks ss = face_sources_sinks(g, face);
      const int paths = max_disjoint_paths(g, face, ss.sources.first(), ss.sinks.first());
      if (paths < dim) {
        r.holt_klee = false;
        r.witness = id;
        r.paths = paths;
        r.required = dim;
        return r;
      }
    }
  }
  return r;
}

}  // namespace pdg
