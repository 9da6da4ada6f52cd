#include "wallcross/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace wallcross {

CrossingEdge CrossingEdge::reversed() const {
  CrossingEdge out = *this;
  std::swap(out.from, out.to);
  for (auto& s : out.separators) std::swap(s.forward, s.backward);
  out.crossing = crossing.negated();
  return out;
}

namespace {

struct Hyperplane {
  RatVector normal;  // local coordinates of the host wall
  Rational offset;

  Rational value(const RatVector& y) const { return dot(normal, y) - offset; }
  bool operator<(const Hyperplane& o) const {
    const auto c = lex_compare(normal, o.normal);
    return c != 0 ? c < 0 : offset < o.offset;
  }
  bool operator==(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
};

Hyperplane hyperplane_through(const std::vector<RatVector>& pts, std::size_t k) {
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  const auto ns = nullspace(diffs, k);
  if (ns.size() != 1) throw XrayError("principal subwall does not span a hyperplane of its host");
  RatVector n = primitive(ns.front());
  for (const auto& c : n) {
    if (c == 0) continue;
    if (c < 0) n = scale(n, Rational(-1));
    break;
  }
  Rational off = dot(n, pts[0]);
  return {std::move(n), std::move(off)};
}

std::vector<Polytope> split(const Polytope& cell, const Hyperplane& h) {
  const auto& verts = cell.vertices();
  std::vector<Rational> val(verts.size());
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    val[i] = h.value(verts[i]);
    pos |= val[i] > 0;
    neg |= val[i] < 0;
  }
  if (!pos || !neg) return {cell};
  std::vector<RatVector> below, above;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (val[i] <= 0) below.push_back(verts[i]);
    if (val[i] >= 0) above.push_back(verts[i]);
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (val[i] >= 0) continue;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (val[j] <= 0) continue;
      const Rational t = val[i] / (val[i] - val[j]);
      RatVector p = add(verts[i], scale(sub(verts[j], verts[i]), t));
      below.push_back(p);
      above.push_back(std::move(p));
    }
  }
  return {Polytope::hull(below), Polytope::hull(above)};
}

bool on_subwall(const WeightedXray& x, std::size_t f, const RatVector& q) {
  for (auto g : x.below(f)) {
    if (x.wall(g).contains(q)) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<RatVector> to_ambient(const AffineSpan& span, const std::vector<RatVector>& local) {
  std::vector<RatVector> out;
  out.reserve(local.size());
  for (const auto& y : local) out.push_back(span.from_local(y));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- decomposition

WallDecomposition decompose_wall(const WeightedXray& x, std::size_t f) {
  WallDecomposition out;
  out.stratum = f;
  const Stratum& host = x.stratum(f);
  const Polytope& wall = host.wall;
  if (wall.dim() == 0) {
    out.subchambers.push_back({host.id, wall, wall.vertices().front()});
    out.cells.push_back(wall);
    out.cell_component.push_back(0);
    return out;
  }

  const AffineSpan& span = wall.span();
  const std::size_t k = wall.dim();
  auto local_of = [&](const std::vector<RatVector>& pts) {
    std::vector<RatVector> out_pts;
    for (const auto& p : pts) {
      if (!span.contains(p)) {
        throw XrayError("malformed X-ray: a subwall of '" + host.id + "' leaves its affine span");
      }
      out_pts.push_back(span.local_coords(p));
    }
    return out_pts;
  };

  const Polytope local_wall = Polytope::hull(local_of(wall.vertices()));
  std::set<Hyperplane> planes;
  for (auto g : x.principal_subwalls(f)) {
    planes.insert(hyperplane_through(local_of(x.wall(g).vertices()), k));
  }
  const std::vector<Hyperplane> hyperplanes(planes.begin(), planes.end());

  std::vector<Polytope> cells{local_wall};
  for (const auto& h : hyperplanes) {
    std::vector<Polytope> next;
    for (const auto& c : cells) {
      for (auto& piece : split(c, h)) next.push_back(std::move(piece));
    }
    cells = std::move(next);
  }

  std::vector<std::vector<int>> signs(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const RatVector c = relative_interior_point(cells[i]);
    for (const auto& h : hyperplanes) signs[i].push_back(sign(h.value(c)));
  }

  struct Candidate {
    std::size_t a, b;
    RatVector rep;
  };
  std::vector<Candidate> interior;
  UnionFind uf(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      std::size_t differing = 0, which = 0;
      for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
        if (signs[i][h] != signs[j][h]) {
          ++differing;
          which = h;
        }
      }
      if (differing != 1) continue;
      std::vector<RatVector> shared;
      for (const auto& v : cells[i].vertices()) {
        if (hyperplanes[which].value(v) == 0) shared.push_back(v);
      }
      if (shared.empty()) continue;
      const Polytope facet = Polytope::hull(shared);
      if (facet.dim() + 1 != k) continue;
      RatVector rep = span.from_local(relative_interior_point(facet));
      if (on_subwall(x, f, rep)) {
        interior.push_back({i, j, std::move(rep)});
      } else {
        uf.unite(i, j);
      }
    }
  }

  // Components, labelled by representative point.
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < cells.size(); ++i) members[uf.find(i)].push_back(i);

  std::vector<Polytope> ambient_cells;
  for (const auto& c : cells) ambient_cells.push_back(Polytope::hull(to_ambient(span, c.vertices())));

  struct Component {
    std::vector<std::size_t> cells;
    Polytope cell;
    RatVector rep;
  };
  std::vector<Component> comps;
  for (auto& [root, list] : members) {
    std::vector<RatVector> pts;
    for (auto i : list) {
      for (const auto& v : ambient_cells[i].vertices()) pts.push_back(v);
    }
    Component comp{list, Polytope::hull(pts), {}};
    std::vector<RatVector> candidates{relative_interior_point(comp.cell)};
    for (auto i : list) candidates.push_back(relative_interior_point(ambient_cells[i]));
    bool found = false;
    for (auto& c : candidates) {
      if (!on_subwall(x, f, c)) {
        comp.rep = std::move(c);
        found = true;
        break;
      }
    }
    if (!found) {
      throw XrayError("could not find a regular representative point in a subchamber of '" + host.id + "'");
    }
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return lex_compare(a.rep, b.rep) < 0; });

  out.cells = std::move(ambient_cells);
  out.cell_component.assign(cells.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto i : comps[c].cells) out.cell_component[i] = c;
    out.subchambers.push_back({host.id, std::move(comps[c].cell), std::move(comps[c].rep)});
  }

  for (auto& cand : interior) {
    if (out.cell_component[cand.a] == out.cell_component[cand.b]) continue;
    out.pieces.push_back({cand.a, cand.b, std::move(cand.rep)});
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& facet : local_wall.facets()) {
      std::vector<RatVector> on_boundary;
      for (const auto& v : cells[i].vertices()) {
        if (facet.slack(v) == 0) on_boundary.push_back(v);
      }
      if (on_boundary.empty()) continue;
      const Polytope piece = Polytope::hull(on_boundary);
      if (piece.dim() + 1 != k) continue;
      out.pieces.push_back({i, kExterior, span.from_local(relative_interior_point(piece))});
    }
  }
  return out;
}

std::size_t locate_in(const WeightedXray& x, const WallDecomposition& d, const RatVector& q) {
  const auto& s = x.stratum(d.stratum);
  if (!s.wall.contains(q)) {
    throw XrayError("point " + to_string(q) + " is not in wall '" + s.id + "'");
  }
  if (on_subwall(x, d.stratum, q)) {
    throw XrayError("point " + to_string(q) + " is a singular point of wall '" + s.id +
                    "'; query a smaller stratum");
  }
  for (std::size_t i = 0; i < d.subchambers.size(); ++i) {
    if (d.subchambers[i].cell.contains(q)) return i;
  }
  throw XrayError("internal: point " + to_string(q) + " lies in no subchamber of '" + s.id + "'");
}

// ---------------------------------------------------------------- crossing graph

CrossingGraph build_crossing_graph(const WeightedXray& x, std::size_t f, const WallDecomposition& own,
                                   const std::vector<const WallDecomposition*>& by_stratum) {
  CrossingGraph graph;
  graph.host = x.stratum(f).id;
  graph.num_subchambers = own.subchambers.size();
  if (x.wall(f).dim() == 0) return graph;

  const AffineSpan& ambient = x.wall(f).span();
  const auto principal = x.principal_subwalls(f);

  using Key = std::tuple<std::size_t, std::size_t, std::vector<Separator>>;
  std::set<Key> seen;
  for (const auto& piece : own.pieces) {
    CrossingEdge edge;
    std::size_t toward_cell = piece.cell;
    if (piece.other_cell == kExterior) {
      edge.from = kExterior;
      edge.to = own.cell_component[piece.cell];
    } else {
      const std::size_t ca = own.cell_component[piece.cell];
      const std::size_t cb = own.cell_component[piece.other_cell];
      edge.from = std::min(ca, cb);
      edge.to = std::max(ca, cb);
      toward_cell = cb == edge.to ? piece.other_cell : piece.cell;
    }
    edge.facet_rep = piece.rep;
    const RatVector toward = relative_interior_point(own.cells[toward_cell]);

    bool have_crossing = false;
    for (auto g : principal) {
      const Polytope& gw = x.wall(g);
      if (!gw.contains(piece.rep) || on_subwall(x, g, piece.rep)) continue;
      const WallDecomposition* gd = g < by_stratum.size() ? by_stratum[g] : nullptr;
      if (!gd) throw XrayError("internal: missing decomposition of '" + x.stratum(g).id + "'");
      Separator sep;
      sep.stratum = x.stratum(g).id;
      sep.subchamber = locate_in(x, *gd, piece.rep);
      const SideFunctional ell = side_functional(ambient, gw.span(), toward);
      for (const auto& w : stratum_weights_in(x, g, f)) {
        const int s = ell.side_of_direction(w);
        if (s > 0) ++sep.forward;
        if (s < 0) ++sep.backward;
      }
      if (!have_crossing) {
        edge.crossing = ell;
        have_crossing = true;
      }
      edge.separators.push_back(std::move(sep));
    }
    if (edge.separators.empty()) {
      throw XrayError("facet not covered by any subwall: piece at " + to_string(piece.rep) + " of wall '" +
                      graph.host + "'");
    }
    std::sort(edge.separators.begin(), edge.separators.end());
    if (!seen.emplace(edge.from, edge.to, edge.separators).second) continue;
    if (edge.from == kExterior && edge.separators.size() > 1) {
      graph.warnings.push_back("exterior crossing into subchamber " + std::to_string(edge.to) + " of '" +
                               graph.host + "' has " + std::to_string(edge.separators.size()) +
                               " separators; using the sum");
    }
    graph.edges.push_back(std::move(edge));
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const CrossingEdge& a, const CrossingEdge& b) {
    const auto key = [](const CrossingEdge& e) {
      return std::make_tuple(e.from == kExterior ? 0 : 1, e.from, e.to);
    };
    if (key(a) != key(b)) return key(a) < key(b);
    return lex_compare(a.facet_rep, b.facet_rep) < 0;
  });
  return graph;
}

// ---------------------------------------------------------------- free functions

std::vector<Subchamber> subchambers(const WeightedXray& x, const StratumId& f) {
  return decompose_wall(x, x.index_of(f)).subchambers;
}

CrossingGraph crossing_graph(const WeightedXray& x, const StratumId& f) {
  const std::size_t fi = x.index_of(f);
  const WallDecomposition own = decompose_wall(x, fi);
  std::vector<WallDecomposition> subs;
  const auto principal = x.principal_subwalls(fi);
  subs.reserve(principal.size());
  std::vector<const WallDecomposition*> by_stratum(x.size(), nullptr);
  for (auto g : principal) subs.push_back(decompose_wall(x, g));
  for (std::size_t i = 0; i < principal.size(); ++i) by_stratum[principal[i]] = &subs[i];
  return build_crossing_graph(x, fi, own, by_stratum);
}

std::size_t locate(const WeightedXray& x, const StratumId& f, const RatVector& q) {
  return locate_in(x, decompose_wall(x, x.index_of(f)), q);
}

ChamberComplex::ChamberComplex(const WeightedXray& x) : xray_(&x) {
  decomps_.resize(x.size());
  for (auto f : x.by_dimension()) decomps_[f] = decompose_wall(x, f);
  std::vector<const WallDecomposition*> by_stratum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) by_stratum[i] = &decomps_[i];
  graphs_.resize(x.size());
  for (auto f : x.by_dimension()) graphs_[f] = build_crossing_graph(x, f, decomps_[f], by_stratum);
}

const CrossingGraph& ChamberComplex::crossing_graph(std::size_t f) const { return *graphs_.at(f); }

std::size_t ChamberComplex::locate(std::size_t f, const RatVector& q) const {
  return locate_in(*xray_, decomps_.at(f), q);
}

}  // namespace wallcross
