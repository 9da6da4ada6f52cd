#include "wallcross/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wallcross {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MultipleMaximal: return "multiple-maximal";
    case ViolationKind::MinimalNotVertex: return "minimal-not-vertex";
    case ViolationKind::OrderIncompatible: return "order-incompatible";
    case ViolationKind::FaceCondition: return "face-condition";
    case ViolationKind::Uniqueness: return "uniqueness";
    case ViolationKind::DimensionDecrease: return "dimension-decrease";
    case ViolationKind::Consistency: return "consistency";
    case ViolationKind::VertexIndependence: return "vertex-independence";
    case ViolationKind::DarbouxCone: return "darboux-cone";
    case ViolationKind::DarbouxMissingCone: return "missing-cone";
    case ViolationKind::DarbouxDuplicateCone: return "duplicate-cone";
    case ViolationKind::SeedInvariant: return "seed-invariant";
  }
  return "unknown";
}

std::string to_string(const Violation& v) {
  std::string out = "[" + to_string(v.kind) + "]";
  for (const auto& id : v.strata) out += " " + id;
  return out + ": " + v.message;
}

namespace {

void finish(std::vector<Violation>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<RatVector> sorted_classes(const std::vector<RatVector>& weights, const RowEchelon& modulo) {
  std::vector<RatVector> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(modulo.reduce(w));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- poset

std::vector<Violation> validate_poset(const WeightedXray& x) {
  std::vector<Violation> out;
  const auto maximal = x.maximal();
  if (maximal.size() != 1) {
    Violation v{ViolationKind::MultipleMaximal, {}, std::to_string(maximal.size()) + " maximal strata"};
    for (auto m : maximal) v.strata.push_back(x.stratum(m).id);
    out.push_back(std::move(v));
  }

  for (std::size_t f = 0; f < x.size(); ++f) {
    const auto& s = x.stratum(f);
    if (s.children.empty() && !s.is_vertex()) {
      out.push_back({ViolationKind::MinimalNotVertex, {s.id},
                     "minimal stratum has a wall of dimension " + std::to_string(s.wall.dim())});
    }
    for (auto g : x.below(f)) {
      const auto& sub = x.stratum(g);
      if (!s.wall.contains(sub.wall)) {
        out.push_back({ViolationKind::OrderIncompatible, {sub.id, s.id},
                       "wall of '" + sub.id + "' is not contained in the wall of '" + s.id + "'"});
      }
      if (sub.wall.dim() >= s.wall.dim()) {
        out.push_back({ViolationKind::DimensionDecrease, {sub.id, s.id},
                       "'" + sub.id + "' < '" + s.id + "' but dimensions are " +
                           std::to_string(sub.wall.dim()) + " and " + std::to_string(s.wall.dim())});
      }
    }

    // Face condition: each face of the wall is the wall of exactly one
    // stratum at or below f.
    std::vector<std::size_t> lower = x.below(f);
    lower.push_back(f);
    for (std::size_t k = 0; k <= s.wall.dim(); ++k) {
      for (const auto& face : faces(s.wall, k)) {
        std::vector<StratumId> hits;
        for (auto g : lower) {
          if (x.wall(g) == face) hits.push_back(x.stratum(g).id);
        }
        if (hits.size() == 1) continue;
        Violation v{ViolationKind::FaceCondition, {s.id},
                    "face " + face.to_string() + " of '" + s.id + "' is the wall of " +
                        std::to_string(hits.size()) + " strata"};
        v.strata.insert(v.strata.end(), hits.begin(), hits.end());
        out.push_back(std::move(v));
      }
    }
  }

  // Uniqueness going up: distinct strata above a common stratum have
  // distinct linear spans.  Each offending pair is reported once.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<std::size_t> up = x.above(j);
    up.push_back(j);
    std::sort(up.begin(), up.end());
    for (std::size_t a = 0; a < up.size(); ++a) {
      for (std::size_t b = a + 1; b < up.size(); ++b) {
        if (x.wall(up[a]).span().linear_part() == x.wall(up[b]).span().linear_part()) {
          pairs.emplace(up[a], up[b]);
        }
      }
    }
  }
  for (const auto& [a, b] : pairs) {
    out.push_back({ViolationKind::Uniqueness, {x.stratum(a).id, x.stratum(b).id},
                   "strata above a common stratum have the same linear span"});
  }

  finish(out);
  return out;
}

// ---------------------------------------------------------------- consistency

std::vector<Violation> validate_consistency(const WeightedXray& x) {
  std::vector<Violation> out;
  for (std::size_t g = 0; g < x.size(); ++g) {
    const auto verts = x.vertices_below(g);
    if (verts.size() < 2) continue;
    const RowEchelon& lin = x.wall(g).span().linear_part();
    const auto& gid = x.stratum(g).id;

    const auto reference = sorted_classes(x.stratum(verts[0]).vertex_data->weights, lin);
    for (std::size_t i = 1; i < verts.size(); ++i) {
      if (sorted_classes(x.stratum(verts[i]).vertex_data->weights, lin) != reference) {
        out.push_back({ViolationKind::Consistency, {gid, x.stratum(verts[0]).id, x.stratum(verts[i]).id},
                       "weight classes modulo Lin of '" + gid + "' differ between '" +
                           x.stratum(verts[0]).id + "' and '" + x.stratum(verts[i]).id + "'"});
      }
    }

    std::vector<std::size_t> up = x.above(g);
    for (auto f : up) {
      const auto ref_in = sorted_classes(weights_at_vertex_in(x, verts[0], f), lin);
      for (std::size_t i = 1; i < verts.size(); ++i) {
        if (sorted_classes(weights_at_vertex_in(x, verts[i], f), lin) != ref_in) {
          out.push_back({ViolationKind::VertexIndependence, {gid, x.stratum(f).id, x.stratum(verts[i]).id},
                         "weights of '" + gid + "' along '" + x.stratum(f).id +
                             "' depend on the chosen vertex"});
        }
      }
    }
  }
  finish(out);
  return out;
}

// ---------------------------------------------------------------- darboux

bool tangent_cone_equals(const Polytope& wall, const RatVector& apex,
                         const std::vector<RatVector>& generators) {
  if (!wall.contains(apex)) return false;
  std::vector<RatVector> pts{zero_vector(apex.size())};
  pts.insert(pts.end(), generators.begin(), generators.end());
  const Polytope cone_hull = Polytope::hull(pts);
  const RatVector origin = zero_vector(apex.size());
  for (const auto& v : wall.vertices()) {
    if (!cone_hull.tangent_cone_contains(origin, sub(v, apex))) return false;
  }
  for (const auto& g : generators) {
    if (!wall.tangent_cone_contains(apex, g)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> linear_subsets(const std::vector<RatVector>& weights) {
  std::vector<RatVector> directions;
  for (const auto& w : weights) {
    if (is_zero(w)) continue;
    RatVector p = primitive(w);
    if (std::find(directions.begin(), directions.end(), p) == directions.end()) {
      directions.push_back(std::move(p));
    }
  }
  if (directions.size() > 20) throw XrayError("too many distinct weight directions to enumerate");
  const std::size_t d = weights.empty() ? 0 : weights.front().size();
  std::set<std::vector<std::size_t>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << directions.size()); ++mask) {
    std::vector<RatVector> basis;
    for (std::size_t i = 0; i < directions.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) basis.push_back(directions[i]);
    }
    const RowEchelon span = row_echelon(basis, d);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (span.contains(weights[i])) subset.push_back(i);
    }
    found.insert(std::move(subset));
  }
  return {found.begin(), found.end()};
}

std::vector<Violation> validate_darboux(const WeightedXray& x) {
  std::vector<Violation> out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    const auto& vs = x.stratum(p);
    if (!vs.vertex_data) continue;
    const RatVector& apex = vs.wall.vertices().front();
    const auto& alpha = vs.vertex_data->weights;
    std::vector<std::size_t> up = x.above(p);
    up.push_back(p);
    std::sort(up.begin(), up.end());

    for (auto f : up) {
      const auto s = weights_at_vertex_in(x, p, f);
      if (!tangent_cone_equals(x.wall(f), apex, s)) {
        out.push_back({ViolationKind::DarbouxCone, {vs.id, x.stratum(f).id},
                       "tangent cone of '" + x.stratum(f).id + "' at '" + vs.id +
                           "' is not the cone on the weights along it"});
      }
    }

    for (const auto& subset : linear_subsets(alpha)) {
      std::vector<RatVector> gens;
      for (auto i : subset) gens.push_back(alpha[i]);
      std::vector<StratumId> hits;
      for (auto f : up) {
        if (tangent_cone_equals(x.wall(f), apex, gens)) hits.push_back(x.stratum(f).id);
      }
      if (hits.size() == 1) continue;
      std::string label = "{";
      for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? ", " : "") + to_string(gens[i]);
      label += "}";
      if (hits.empty()) {
        out.push_back({ViolationKind::DarbouxMissingCone, {vs.id},
                       "no stratum above '" + vs.id + "' realizes the cone on " + label});
      } else {
        Violation v{ViolationKind::DarbouxDuplicateCone, {vs.id},
                    std::to_string(hits.size()) + " strata above '" + vs.id + "' realize the cone on " + label};
        v.strata.insert(v.strata.end(), hits.begin(), hits.end());
        out.push_back(std::move(v));
      }
    }
  }
  finish(out);
  return out;
}

// ---------------------------------------------------------------- seeds

std::vector<Violation> validate_vertex_data(const WeightedXray& x) {
  std::vector<Violation> out;
  for (const auto& s : x.strata()) {
    if (!s.vertex_data || !s.vertex_data->isolated()) continue;
    const auto& d = *s.vertex_data;
    if (d.seed_signature != 1 || d.seed_poincare != IntPolynomial{1} || d.seed_euler != 1) {
      out.push_back({ViolationKind::SeedInvariant, {s.id},
                     "isolated fixed point with seeds (" + std::to_string(d.seed_signature) + ", " +
                         d.seed_poincare.to_string() + ", " + std::to_string(d.seed_euler) +
                         "), expected (1, 1, 1)"});
    }
  }
  finish(out);
  return out;
}

std::vector<Violation> validate_all(const WeightedXray& x) {
  std::vector<Violation> out = validate_poset(x);
  for (auto&& part : {validate_consistency(x), validate_darboux(x), validate_vertex_data(x)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  finish(out);
  return out;
}

}  // namespace wallcross
