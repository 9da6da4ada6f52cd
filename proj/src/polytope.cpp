#include "wallcross/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace wallcross {

// ---------------------------------------------------------------- AffineSpan

AffineSpan::AffineSpan(RatVector base_point, RowEchelon linear_part)
    : base_(std::move(base_point)), linear_(std::move(linear_part)) {}

AffineSpan AffineSpan::of(std::span<const RatVector> points) {
  if (points.empty()) throw GeometryError("empty point set");
  const RatVector& base = points.front();
  std::vector<RatVector> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points.subspan(1)) {
    if (p.size() != base.size()) throw GeometryError("points of mixed dimension");
    diffs.push_back(sub(p, base));
  }
  return AffineSpan(base, row_echelon(std::move(diffs), base.size()));
}

bool AffineSpan::contains(const RatVector& x) const {
  return x.size() == base_.size() && linear_.contains(sub(x, base_));
}

bool AffineSpan::contains_linear(const AffineSpan& other) const {
  return std::all_of(other.linear_basis().begin(), other.linear_basis().end(),
                     [&](const RatVector& v) { return linear_.contains(v); });
}

bool AffineSpan::contains_affine(const AffineSpan& other) const {
  return contains(other.base_point()) && contains_linear(other);
}

RatVector AffineSpan::local_coords(const RatVector& x) const {
  return linear_.coordinates(sub(x, base_));
}

RatVector AffineSpan::from_local(const RatVector& y) const {
  RatVector x = base_;
  for (std::size_t i = 0; i < linear_.rows.size(); ++i) x = add(x, scale(linear_.rows[i], y[i]));
  return x;
}

bool AffineSpan::operator==(const AffineSpan& other) const {
  return dim() == other.dim() && ambient_dim() == other.ambient_dim() && contains_affine(other);
}

// ---------------------------------------------------------------- hull

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  RatVector v;
  Bits zeros;
};

// Double description method on the cone {(a, c) : a . y_i - c <= 0}.  For a
// full-dimensional point set its extreme rays are exactly the facet
// inequalities a . y <= c of the convex hull.
std::vector<RatVector> facet_cone_rays(const std::vector<RatVector>& local_points) {
  const std::size_t m = local_points.size();
  const std::size_t k = local_points.front().size();
  std::vector<RatVector> constraint(m);
  for (std::size_t i = 0; i < m; ++i) {
    constraint[i] = local_points[i];
    constraint[i].push_back(Rational(-1));
  }

  std::vector<std::size_t> initial;
  {
    std::vector<RatVector> chosen;
    for (std::size_t i = 0; i < m && initial.size() < k + 1; ++i) {
      chosen.push_back(constraint[i]);
      if (rank(chosen, k + 1) == chosen.size()) {
        initial.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (initial.size() != k + 1) throw GeometryError("hull: point set is not full-dimensional");

  std::vector<RatVector> a;
  for (auto i : initial) a.push_back(constraint[i]);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= k; ++j) {
    RatVector rhs = zero_vector(k + 1);
    rhs[j] = -1;
    auto r = solve_square(a, rhs);
    Ray ray{primitive(*r), Bits(m)};
    for (std::size_t jj = 0; jj <= k; ++jj) {
      if (jj != j) ray.zeros.set(initial[jj]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto i : initial) processed[i] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(constraint[h], rays[r].v);
      const int s = sign(value[r]);
      if (s > 0) {
        pos.push_back(r);
      } else {
        if (s < 0) neg.push_back(r);
        next.push_back(rays[r]);
        if (s == 0) next.back().zeros.set(h);
      }
    }
    if (pos.empty()) continue;
    for (auto p : pos) {
      for (auto n : neg) {
        const Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 1 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVector combo = sub(scale(rays[n].v, value[p]), scale(rays[p].v, value[n]));
        Ray ray{primitive(combo), common};
        ray.zeros.set(h);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace

Polytope Polytope::hull(std::span<const RatVector> input) {
  if (input.empty()) throw GeometryError("empty point set");
  const std::size_t d = input.front().size();
  for (const auto& p : input) {
    if (p.size() != d) throw GeometryError("points of mixed dimension");
  }
  std::vector<RatVector> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.span_ = AffineSpan::of(pts);
  const std::size_t k = out.span_.dim();
  if (k == 0) {
    out.vertices_ = {pts.front()};
    return out;
  }

  std::vector<RatVector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(out.span_.local_coords(p));

  const auto rays = facet_cone_rays(local);
  std::set<RatVector, LexLess> local_facets;
  for (const auto& r : rays) {
    RatVector normal(r.begin(), r.end() - 1);
    if (is_zero(normal)) continue;
    local_facets.insert(r);
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVector> tight;
    for (const auto& f : local_facets) {
      RatVector normal(f.begin(), f.end() - 1);
      if (dot(normal, local[i]) == f.back()) tight.push_back(std::move(normal));
    }
    if (rank(tight, k) == k) out.vertices_.push_back(pts[i]);
  }

  const auto& pivots = out.span_.linear_part().pivots;
  const auto& base = out.span_.base_point();
  for (const auto& f : local_facets) {
    Facet facet{zero_vector(d), f.back()};
    for (std::size_t j = 0; j < k; ++j) {
      facet.normal[pivots[j]] = f[j];
      facet.offset += f[j] * base[pivots[j]];
    }
    out.facets_.push_back(std::move(facet));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& x, const Facet& y) {
    const auto c = lex_compare(x.normal, y.normal);
    return c != 0 ? c < 0 : x.offset < y.offset;
  });
  return out;
}

bool Polytope::contains(const RatVector& x) const {
  if (!span_.contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.slack(x) >= 0; });
}

bool Polytope::contains_relative_interior(const RatVector& x) const {
  if (!span_.contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.slack(x) > 0; });
}

bool Polytope::contains(const Polytope& other) const {
  return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                     [&](const RatVector& v) { return contains(v); });
}

std::vector<std::size_t> Polytope::tight_facets(const RatVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].slack(x) == 0) out.push_back(i);
  }
  return out;
}

bool Polytope::tangent_cone_contains(const RatVector& x, const RatVector& u) const {
  if (!span_.contains_direction(u)) return false;
  for (auto i : tight_facets(x)) {
    if (dot(facets_[i].normal, u) > 0) return false;
  }
  return true;
}

std::string Polytope::to_string() const {
  std::string out = "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ", ";
    out += wallcross::to_string(vertices_[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------- faces

std::vector<Polytope> faces(const Polytope& p, std::size_t k) {
  if (k > p.dim()) {
    throw GeometryError("faces: dimension " + std::to_string(k) + " exceeds polytope dimension " +
                        std::to_string(p.dim()));
  }
  if (k == p.dim()) return {p};

  const auto& verts = p.vertices();
  using IndexSet = std::vector<std::size_t>;
  std::set<IndexSet> found;
  for (const auto& f : p.facets()) {
    IndexSet s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (f.slack(verts[i]) == 0) s.push_back(i);
    }
    found.insert(std::move(s));
  }
  // Every proper face is an intersection of facets.
  std::vector<IndexSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<IndexSet> fresh;
    const std::vector<IndexSet> snapshot(found.begin(), found.end());
    for (const auto& a : frontier) {
      for (const auto& b : snapshot) {
        IndexSet c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && found.insert(c).second) fresh.push_back(std::move(c));
      }
    }
    frontier = std::move(fresh);
  }

  std::vector<Polytope> out;
  for (const auto& s : found) {
    std::vector<RatVector> pts;
    for (auto i : s) pts.push_back(verts[i]);
    Polytope face = Polytope::hull(pts);
    if (face.dim() == k) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Polytope& a, const Polytope& b) {
    return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                        b.vertices().begin(), b.vertices().end(), LexLess{});
  });
  return out;
}

RatVector relative_interior_point(const Polytope& p) { return centroid(p.vertices()); }

// ---------------------------------------------------------------- side functional

SideFunctional SideFunctional::negated() const {
  return SideFunctional(scale(normal_, Rational(-1)), -offset_);
}

SideFunctional side_functional(const AffineSpan& ambient, const AffineSpan& separator,
                               const RatVector& toward) {
  if (!ambient.contains_affine(separator) || separator.dim() + 1 != ambient.dim()) {
    throw GeometryError("side_functional: separator is not a codimension-1 subspace of the ambient span");
  }
  if (!ambient.contains(toward)) {
    throw GeometryError("side_functional: reference point " + to_string(toward) +
                        " is not in the ambient span");
  }
  if (separator.contains(toward)) {
    throw GeometryError("side_functional: reference point " + to_string(toward) +
                        " lies on the separator");
  }
  const RatVector u = sub(toward, separator.base_point());
  const RatVector normal = primitive(sub(u, project_onto(separator.linear_basis(), u)));
  return SideFunctional(normal, dot(normal, separator.base_point()));
}

}  // namespace wallcross
