#include "doctest.h"
#include "testing.hpp"
#include "wallcross/linalg.hpp"

using namespace wallcross;
using wallcross::testing::rv;
using wallcross::testing::rvs;

TEST_CASE("echelon form is a canonical basis of the span") {
  const RowEchelon a = row_echelon(rvs({"1, 1, 0", "0, 1, 1"}), 3);
  const RowEchelon b = row_echelon(rvs({"1, 2, 1", "2, 1, -1", "3, 3, 0"}), 3);
  CHECK(a.rank() == 2);
  CHECK(a == b);
  CHECK(a.contains(rv("1, 0, -1")));
  CHECK_FALSE(a.contains(rv("0, 0, 1")));
}

TEST_CASE("reduce gives equal classes for vectors differing by the span") {
  const RowEchelon line = row_echelon(rvs({"-1, 1"}), 2);
  CHECK(line.reduce(rv("-4, 0")) == line.reduce(rv("0, -4")));
  CHECK(line.reduce(rv("-4, 4")) == rv("0, 0"));
}

TEST_CASE("coordinates recover combination coefficients") {
  const RowEchelon e = row_echelon(rvs({"1, 0, 2", "0, 1, 3"}), 3);
  const RatVector v = rv("2, -1, 1");
  const RatVector c = e.coordinates(v);
  RatVector back = zero_vector(3);
  for (std::size_t i = 0; i < e.rows.size(); ++i) back = add(back, scale(e.rows[i], c[i]));
  CHECK(back == v);
}

TEST_CASE("nullspace vectors annihilate every row") {
  const auto rows = rvs({"1, 2, 3, 4", "2, 4, 6, 8", "0, 1, 1, 1"});
  const auto ns = nullspace(rows, 4);
  CHECK(ns.size() == 2);
  for (const auto& n : ns) {
    for (const auto& r : rows) CHECK(dot(n, r) == 0);
  }
  CHECK(rank(ns, 4) == 2);
}

TEST_CASE("square solves and singular detection") {
  const auto x = solve_square(rvs({"2, 1", "1, 3"}), rv("3, 5"));
  REQUIRE(x);
  CHECK(*x == rv("4/5, 7/5"));
  CHECK_FALSE(solve_square(rvs({"1, 2", "2, 4"}), rv("1, 1")));
}

TEST_CASE("projection leaves an orthogonal residual") {
  const auto basis = rvs({"1, 1, 0"});
  const RatVector v = rv("3, 1, 5");
  const RatVector p = project_onto(basis, v);
  CHECK(p == rv("2, 2, 0"));
  CHECK(dot(sub(v, p), basis[0]) == 0);
}
