#include "doctest.h"
#include "testing.hpp"
#include "wallcross/polytope.hpp"

#include <algorithm>

using namespace wallcross;
using namespace wallcross::testing;

namespace {

// q lies in the simplex on `s` (affinely independent) iff its barycentric
// coordinates are all nonnegative.
bool in_simplex(const std::vector<RatVector>& s, const RatVector& q) {
  const std::size_t d = q.size();
  std::vector<RatVector> a(d + 1, zero_vector(d + 1));
  RatVector b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c <= d; ++c) a[r][c] = s[c][r];
    b[r] = q[r];
  }
  for (std::size_t c = 0; c <= d; ++c) a[d][c] = 1;
  b[d] = 1;
  const auto x = solve_square(a, b);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; });
}

// Caratheodory: q is in conv(P) for full-dimensional P iff it lies in a
// simplex spanned by d+1 of its points.
bool in_hull_by_simplices(const std::vector<RatVector>& pts, const RatVector& q) {
  const std::size_t d = q.size();
  const std::size_t n = pts.size();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d + 1), true);
  do {
    std::vector<RatVector> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(pts[i]);
    }
    if (in_simplex(s, q)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("hull of a single point is a vertex") {
  const Polytope p = Polytope::hull(rvs({"0, 0"}));
  CHECK(p.dim() == 0);
  CHECK(p.vertices() == rvs({"0, 0"}));
}

TEST_CASE("hull drops a midpoint") {
  const Polytope p = Polytope::hull(rvs({"0, 0", "1, 0", "1/2, 0"}));
  CHECK(p.dim() == 1);
  CHECK(p.vertices() == rvs({"0, 0", "1, 0"}));
}

TEST_CASE("hull of the diagonal configuration keeps the triangle corners") {
  const auto pts = rvs({"0, 0", "4, 0", "0, 4", "3/2, 5/2", "5/2, 3/2"});
  const Polytope p = Polytope::hull(pts);
  CHECK(p.dim() == 2);
  CHECK(p.vertices() == rvs({"0, 0", "0, 4", "4, 0"}));
  // The discarded points are on x + y = 4 and are convex combinations of the corners.
  for (const auto& q : rvs({"3/2, 5/2", "5/2, 3/2"})) {
    CHECK(q[0] + q[1] == 4);
    CHECK(in_hull_by_simplices(p.vertices(), q));
  }
}

TEST_CASE("hull of nothing is an error") {
  CHECK_THROWS_WITH_AS(Polytope::hull(std::vector<RatVector>{}), "empty point set", GeometryError);
}

TEST_CASE("equal points give a zero-dimensional hull") {
  const Polytope p = Polytope::hull(rvs({"1/3, 2", "1/3, 2", "2/6, 2"}));
  CHECK(p.dim() == 0);
  CHECK(p.vertices().size() == 1);
}

TEST_CASE("faces of small polytopes") {
  const Polytope square = Polytope::hull(rvs({"0, 0", "1, 0", "0, 1", "1, 1"}));
  CHECK(faces(square, 0).size() == 4);
  CHECK(faces(square, 1).size() == 4);
  CHECK(faces(square, 2) == std::vector<Polytope>{square});
  const Polytope seg = Polytope::hull(rvs({"0, 0", "4, 0"}));
  const auto ends = faces(seg, 0);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].vertices() == rvs({"0, 0"}));
  CHECK(ends[1].vertices() == rvs({"4, 0"}));
  const Polytope tri = Polytope::hull(rvs({"0, 0", "4, 0", "0, 4"}));
  CHECK(faces(tri, 1).size() == 3);
  CHECK_THROWS(faces(tri, 3));
}

TEST_CASE("simplex face counts are binomial") {
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<RatVector> pts{zero_vector(d)};
    for (std::size_t i = 0; i < d; ++i) {
      RatVector e = zero_vector(d);
      e[i] = i + 1;
      pts.push_back(e);
    }
    const Polytope s = Polytope::hull(pts);
    for (std::size_t k = 0; k <= d; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      CHECK(faces(s, k).size() == binomial(d + 1, k + 1));
    }
  }
}

TEST_CASE("cube face counts") {
  std::vector<RatVector> pts;
  for (int m = 0; m < 8; ++m) pts.push_back({Rational(m & 1), Rational((m >> 1) & 1), Rational((m >> 2) & 1)});
  const Polytope c = Polytope::hull(pts);
  CHECK(faces(c, 0).size() == 8);
  CHECK(faces(c, 1).size() == 12);
  CHECK(faces(c, 2).size() == 6);
}

TEST_CASE("relative interior points are vertex centroids") {
  CHECK(relative_interior_point(Polytope::hull(rvs({"2, 3"}))) == rv("2, 3"));
  CHECK(relative_interior_point(Polytope::hull(rvs({"0, 0", "4, 0"}))) == rv("2, 0"));
  const Polytope tri = Polytope::hull(rvs({"0, 0", "4, 0", "0, 4"}));
  CHECK(relative_interior_point(tri) == rv("4/3, 4/3"));
  CHECK(tri.contains_relative_interior(relative_interior_point(tri)));
}

TEST_CASE("lower-dimensional polytopes test membership inside their span") {
  const Polytope seg = Polytope::hull(rvs({"4, 0", "0, 4"}));
  CHECK(seg.contains(rv("3/2, 5/2")));
  CHECK_FALSE(seg.contains(rv("3/2, 5/3")));
  CHECK_FALSE(seg.contains(rv("5, -1")));
  CHECK(seg.contains_relative_interior(rv("2, 2")));
  CHECK_FALSE(seg.contains_relative_interior(rv("4, 0")));
}

TEST_CASE("hull is idempotent on random point sets") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<RatVector> pts;
    for (int i = 0; i < 9; ++i) {
      RatVector p;
      for (std::size_t k = 0; k < d; ++k) p.push_back(random_rational(rng, -3, 3, 2));
      pts.push_back(p);
    }
    const Polytope p = Polytope::hull(pts);
    CHECK(Polytope::hull(p.vertices()) == p);
    for (const auto& q : pts) CHECK(p.contains(q));
  }
}

TEST_CASE("facet and simplex membership agree on 1000 random points") {
  Rng rng(2024);
  int agree = 0;
  for (int poly = 0; poly < 10; ++poly) {
    const std::size_t d = poly % 2 == 0 ? 2 : 3;
    std::vector<RatVector> pts;
    for (int i = 0; i < 7; ++i) {
      RatVector p;
      for (std::size_t k = 0; k < d; ++k) p.push_back(random_rational(rng, -4, 4, 3));
      pts.push_back(p);
    }
    const Polytope p = Polytope::hull(pts);
    if (p.dim() != d) continue;
    // Non-vertices are exactly the points inside the hull of the others.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<RatVector> others;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[j] != pts[i]) others.push_back(pts[j]);
      }
      const bool is_vertex = std::find(p.vertices().begin(), p.vertices().end(), pts[i]) != p.vertices().end();
      CHECK(is_vertex == !(others.size() > d && in_hull_by_simplices(others, pts[i])));
    }
    for (int s = 0; s < 100; ++s) {
      RatVector q;
      for (std::size_t k = 0; k < d; ++k) q.push_back(random_rational(rng, -4, 4, 5));
      const bool by_facets = p.contains(q);
      CHECK(by_facets == in_hull_by_simplices(p.vertices(), q));
      agree += by_facets == in_hull_by_simplices(p.vertices(), q);
    }
  }
  CHECK(agree == 1000);
}

TEST_CASE("side functional across a line in the plane") {
  const AffineSpan plane = Polytope::hull(rvs({"0, 0", "4, 0", "0, 4"})).span();
  const AffineSpan line = AffineSpan::of(rvs({"4, 0", "0, 4"}));
  const SideFunctional l = side_functional(plane, line, rv("0, 0"));
  CHECK(l.side_of_point(rv("0, 0")) > 0);
  CHECK(l.side_of_point(rv("4, 0")) == 0);
  CHECK(l.side_of_point(rv("3, 3")) < 0);
  // Proportional to 4 - x - y.
  CHECK(l.at_point(rv("1, 0")) * 4 == l.at_point(rv("0, 0")) * 3);
  CHECK(l.side_of_direction(rv("-1, 1")) == 0);
}

TEST_CASE("side functional on a line through a point") {
  const AffineSpan axis = AffineSpan::of(rvs({"0, 0", "5, 0"}));
  const AffineSpan pt = AffineSpan::of(rvs({"1, 0"}));
  const SideFunctional l = side_functional(axis, pt, rv("3, 0"));
  CHECK(l.at_point(rv("3, 0")) == l.at_point(rv("2, 0")) * 2);
  CHECK(l.side_of_point(rv("0, 0")) < 0);
  const SideFunctional m = l.negated();
  for (const auto& q : rvs({"-2, 0", "1, 0", "7/3, 0"})) CHECK(m.side_of_point(q) == -l.side_of_point(q));
}

TEST_CASE("side functional errors") {
  const AffineSpan plane = AffineSpan::of(rvs({"0, 0", "1, 0", "0, 1"}));
  CHECK_THROWS(side_functional(plane, AffineSpan::of(rvs({"1, 1"})), rv("0, 0")));
  CHECK_THROWS(side_functional(plane, AffineSpan::of(rvs({"4, 0", "0, 4"})), rv("2, 2")));
}

TEST_CASE("tangent cones at vertices") {
  const Polytope tri = Polytope::hull(rvs({"0, 0", "4, 0", "0, 4"}));
  CHECK(tri.tangent_cone_contains(rv("0, 0"), rv("1, 1")));
  CHECK_FALSE(tri.tangent_cone_contains(rv("0, 0"), rv("-1, 1")));
  CHECK(tri.tangent_cone_contains(rv("4, 0"), rv("-1, 1")));
}
