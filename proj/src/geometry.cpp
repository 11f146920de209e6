#include "pdg/geometry.hpp"

#include <algorithm>
#include <random>
#include <regex>

#include "pdg/error.hpp"

namespace pdg {

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*\+?(-?[0-9]+)(?:/([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw Error(ErrorKind::InvalidInput, "not a rational: '" + text + "'");
  const boost::multiprecision::mpz_int num(m[1].str());
  const boost::multiprecision::mpz_int den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::size_t check_dimensions(const Geometry& geometry) {
  if (geometry.points.empty()) throw Error(ErrorKind::InvalidInput, "no points");
  const std::size_t d = geometry.points.front().coords.size();
  for (const RationalPoint& p : geometry.points) {
    if (p.coords.size() != d) throw Error(ErrorKind::DimensionMismatch, "points differ in dimension");
  }
  for (const Halfspace& h : geometry.halfspaces) {
    if (h.normal.size() != d)
      throw Error(ErrorKind::DimensionMismatch, "inequality dimension differs from the points");
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x == 0; }))
      throw Error(ErrorKind::InvalidInput, "inequality with zero normal");
  }
  return d;
}

}  // namespace

VertexFacetIncidence verify_vh(const Geometry& geometry, const std::string& name) {
  check_dimensions(geometry);
  VertexFacetIncidence inc;
  inc.name = name;
  const int n = static_cast<int>(geometry.points.size());
  const int m = static_cast<int>(geometry.halfspaces.size());
  for (int v = 0; v < n; ++v)
    inc.vertex_names.push_back(v < static_cast<int>(geometry.vertex_names.size()) ? geometry.vertex_names[v]
                                                                                  : std::to_string(v + 1));
  for (int f = 0; f < m; ++f) {
    inc.facet_names.push_back(f < static_cast<int>(geometry.facet_names.size())
                                  ? geometry.facet_names[f]
                                  : "F_" + std::to_string(f + 1));
    VertexSet on;
    for (int v = 0; v < n; ++v) {
      const Rational lhs = dot(geometry.halfspaces[f].normal, geometry.points[v].coords);
      if (lhs > geometry.halfspaces[f].offset)
        throw Error(ErrorKind::InfeasiblePoint, "vertex " + inc.vertex_names[v] + " violates " +
                                                    inc.facet_names[f] + " (" + to_string(lhs) + " > " +
                                                    to_string(geometry.halfspaces[f].offset) + ")");
      if (lhs == geometry.halfspaces[f].offset) on.insert(v);
    }
    inc.facets.push_back(on);
  }
  return inc;
}

FacetOrder line_shelling(const std::vector<Halfspace>& halfspaces, const DirectedLine& line) {
  if (std::all_of(line.direction.begin(), line.direction.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorKind::NotGeneric, "zero direction");
  std::vector<std::pair<Rational, int>> hits;
  for (std::size_t f = 0; f < halfspaces.size(); ++f) {
    const Halfspace& h = halfspaces[f];
    if (h.normal.size() != line.base.coords.size() || h.normal.size() != line.direction.size())
      throw Error(ErrorKind::DimensionMismatch, "line and inequality dimensions differ");
    const Rational slack = h.offset - dot(h.normal, line.base.coords);
    if (slack <= 0) throw Error(ErrorKind::NotInterior, "base point is not strictly interior");
    const Rational rate = dot(h.normal, line.direction);
    if (rate == 0) throw Error(ErrorKind::NotGeneric, "line is parallel to a facet hyperplane");
    hits.emplace_back(slack / rate, static_cast<int>(f));
  }
  std::sort(hits.begin(), hits.end());
  for (std::size_t k = 1; k < hits.size(); ++k) {
    if (hits[k].first == hits[k - 1].first)
      throw Error(ErrorKind::NotGeneric, "line meets two facet hyperplanes at one point");
  }
  FacetOrder order;
  for (const auto& [t, f] : hits) {
    if (t > 0) order.push_back(f);
  }
  for (const auto& [t, f] : hits) {
    if (t < 0) order.push_back(f);
  }
  return order;
}

RationalPoint centroid(const std::vector<RationalPoint>& points, VertexSet which) {
  RationalPoint c{std::vector<Rational>(points.front().coords.size(), 0)};
  which.for_each([&](int v) {
    for (std::size_t k = 0; k < c.coords.size(); ++k) c.coords[k] += points[v].coords[k];
  });
  for (Rational& x : c.coords) x /= which.size();
  return c;
}

namespace {

// Positive-weight combination of the listed points: a relative-interior point.
// Weights are pseudo-random so that symmetric facets do not give special lines.
RationalPoint weighted_centroid(const std::vector<RationalPoint>& points, VertexSet which, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> jitter(0, 63);
  RationalPoint c{std::vector<Rational>(points.front().coords.size(), 0)};
  Rational total = 0;
  which.for_each([&](int v) {
    const Rational w = 1 + Rational(jitter(rng), 64);
    total += w;
    for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += w * points[v].coords[i];
  });
  for (Rational& x : c.coords) x /= total;
  return c;
}

}  // namespace

FacetOrder two_facet_start_shelling(const Geometry& geometry, int i, int j, bool reversed, int max_retries) {
  const VertexFacetIncidence inc = verify_vh(geometry);
  const int m = inc.num_facets();
  if (i < 0 || j < 0 || i >= m || j >= m) throw Error(ErrorKind::InvalidInput, "facet index out of range");
  if (i == j) throw Error(ErrorKind::NotAdjacentFacets, "a facet is not adjacent to itself");
  const FaceLattice lat = FaceLattice::build(inc);
  const VertexSet ridge = inc.facets[i] & inc.facets[j];
  const auto ridge_id = lat.find(ridge);
  if (!ridge_id || lat.face(*ridge_id).dimension != lat.dimension() - 2)
    throw Error(ErrorKind::NotAdjacentFacets,
                inc.facet_names[i] + " and " + inc.facet_names[j] + " do not share a ridge");

  const RationalPoint p = centroid(geometry.points, ridge);
  const std::size_t d = p.coords.size();
  Rational eps1(1, 2), eps2(1, 3);
  for (int attempt = 0; attempt < max_retries; ++attempt, eps1 /= 2, eps2 /= 2) {
    const RationalPoint q = weighted_centroid(geometry.points, inc.facets[i], 2 * attempt + 1);
    const RationalPoint q2 = weighted_centroid(geometry.points, inc.facets[j], 2 * attempt + 2);
    std::vector<Rational> r(d), r2(d), dir(d);
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = (p.coords[k] + eps1 * q.coords[k]) / (1 + eps1);
      r2[k] = (p.coords[k] + eps2 * q2.coords[k]) / (1 + eps2);
      dir[k] = (p.coords[k] - r[k]) + (p.coords[k] - r2[k]);
    }
    // Enter the polytope halfway between where the line enters and r.
    bool have_entry = false;
    Rational entry;
    bool parallel = false;
    for (const Halfspace& h : geometry.halfspaces) {
      const Rational rate = dot(h.normal, dir);
      if (rate == 0) {
        parallel = true;
        break;
      }
      if (rate < 0) {
        const Rational t = (h.offset - dot(h.normal, r)) / rate;
        if (!have_entry || t > entry) entry = t;
        have_entry = true;
      }
    }
    if (parallel || !have_entry || entry >= 0) continue;
    DirectedLine line;
    line.base.coords.resize(d);
    for (std::size_t k = 0; k < d; ++k) line.base.coords[k] = r[k] + entry / 2 * dir[k];
    line.direction = dir;
    if (reversed) {
      for (Rational& x : line.direction) x = -x;
    }
    FacetOrder order;
    try {
      order = line_shelling(geometry.halfspaces, line);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotGeneric || e.kind() == ErrorKind::NotInterior) continue;
      throw;
    }
    const bool fits = reversed ? (order[m - 2] == j && order[m - 1] == i) : (order[0] == i && order[1] == j);
    if (fits) return order;
  }
  throw Error(ErrorKind::DegenerateAfterRetries,
              "no generic line found after " + std::to_string(max_retries) + " attempts");
}

std::vector<DirectedLine> sample_generic_lines(const Geometry& geometry, int count, std::uint64_t seed) {
  const std::size_t d = check_dimensions(geometry);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 20);
  std::uniform_int_distribution<int> component(-9, 9);
  std::vector<DirectedLine> lines;
  const int n = static_cast<int>(geometry.points.size());
  for (int tries = 0; static_cast<int>(lines.size()) < count && tries < 100 * count + 100; ++tries) {
    DirectedLine line;
    line.base.coords.assign(d, 0);
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
      const Rational w = weight(rng);
      total += w;
      for (std::size_t k = 0; k < d; ++k) line.base.coords[k] += w * geometry.points[v].coords[k];
    }
    for (Rational& x : line.base.coords) x /= total;
    line.direction.resize(d);
    for (Rational& x : line.direction) x = component(rng);
    try {
      line_shelling(geometry.halfspaces, line);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotGeneric || e.kind() == ErrorKind::NotInterior) continue;
      throw;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

Geometry cube_geometry(int d) {
  Geometry g;
  for (int mask = 0; mask < (1 << d); ++mask) {
    RationalPoint p;
    std::string name;
    for (int k = 0; k < d; ++k) {
      const bool low = (mask >> k) & 1;
      p.coords.push_back(low ? -1 : 1);
      name += low ? '-' : '+';
    }
    g.points.push_back(std::move(p));
    g.vertex_names.push_back(name);
  }
  for (int k = 0; k < d; ++k) {
    for (int sign : {1, -1}) {
      Halfspace h{std::vector<Rational>(d, 0), 1};
      h.normal[k] = sign;
      g.halfspaces.push_back(std::move(h));
      g.facet_names.push_back(std::string(sign > 0 ? "x" : "-x") + std::to_string(k + 1) + "<=1");
    }
  }
  return g;
}

}  // namespace pdg
