#include "doctest.h"
#include "testing.hpp"
#include "wallcross/generators.hpp"
#include "wallcross/validate.hpp"

using namespace wallcross;
using namespace wallcross::testing;

TEST_CASE("projection matrix parsing") {
  const ProjectionMatrix m = ProjectionMatrix::parse("0,4,2/3; 1,-1,0");
  CHECK(m.num_rows() == 2);
  CHECK(m.num_cols() == 3);
  CHECK(m.column(2) == rv("2/3, 0"));
  CHECK_THROWS(ProjectionMatrix::parse("0,1;2"));
  CHECK_THROWS(ProjectionMatrix::parse(""));
}

TEST_CASE("stratum counts of the bundled examples") {
  CHECK(presets::cp3().size() == 5);
  CHECK(presets::generic_cp4().size() == 16);
  CHECK(presets::nongeneric_cp4().size() == 11);
  for (const auto& x : {presets::cp3(), presets::generic_cp4(), presets::nongeneric_cp4()}) {
    CHECK(validate_all(x).empty());
  }
}

TEST_CASE("vertex weights of projective space") {
  const WeightedXray x = presets::cp3();
  const auto& v = x.stratum("{1}").vertex_data;
  REQUIRE(v);
  CHECK(v->weights == rvs({"-1", "1", "2"}));
  CHECK(v->isolated());
}

TEST_CASE("labels name vertices and subsets") {
  const WeightedXray x = presets::nongeneric_cp4();
  CHECK(x.stratum(x.top()).id == "{p,t,q,r,s}");
  CHECK_NOTHROW(x.index_of("{t,q,r,s}"));
  CHECK_NOTHROW(x.index_of("{q}"));
}

TEST_CASE("unsupported projections") {
  CHECK_THROWS_WITH(cpn_xray(2, ProjectionMatrix::parse("0,1,1;0,2,2")),
                    doctest::Contains("fixed points not isolated"));
  CHECK_THROWS_WITH(cpn_xray(2, ProjectionMatrix::parse("0,1,2;0,1,2")), doctest::Contains("not full-dimensional"));
  CHECK_THROWS(cpn_xray(3, ProjectionMatrix::parse("0,1,2")));
}

TEST_CASE("projective X-rays are affinely equivariant") {
  Rng rng(17);
  for (const char* text : {presets::kCp3Matrix, presets::kGenericCp4Matrix, presets::kNongenericCp4Matrix}) {
    const ProjectionMatrix pi = ProjectionMatrix::parse(text);
    const int n = static_cast<int>(pi.num_cols()) - 1;
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_unimodular(rng, pi.num_rows());
      RatVector t;
      for (std::size_t i = 0; i < pi.num_rows(); ++i) t.push_back(random_rational(rng, -3, 3));
      ProjectionMatrix mapped;
      mapped.rows.assign(pi.num_rows(), RatVector(pi.num_cols()));
      for (std::size_t k = 0; k < pi.num_cols(); ++k) {
        const RatVector c = add(apply_map(a, pi.column(k)), t);
        for (std::size_t i = 0; i < c.size(); ++i) mapped.rows[i][k] = c[i];
      }
      CHECK(transform(cpn_xray(n, pi), a, t) == cpn_xray(n, mapped));
    }
  }
}

TEST_CASE("toric X-rays have one stratum per face") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const Polytope s = standard_simplex(d);
    const WeightedXray xs = delzant_xray(s, edge_direction_weights(s));
    CHECK(xs.size() == (std::size_t{1} << (d + 1)) - 1);
    CHECK(validate_all(xs).empty());
    const Polytope c = unit_cube(d);
    const WeightedXray xc = delzant_xray(c, edge_direction_weights(c));
    std::size_t faces = 1;
    for (std::size_t i = 0; i < d; ++i) faces *= 3;
    CHECK(xc.size() == faces);
    CHECK(validate_all(xc).empty());
  }
}

TEST_CASE("toric X-rays need simple full-dimensional polytopes") {
  const Polytope pyramid = Polytope::hull(rvs({"0,0,0", "1,0,0", "0,1,0", "1,1,0", "1/2,1/2,1"}));
  CHECK_THROWS_WITH(delzant_xray(pyramid, edge_direction_weights(pyramid)), doctest::Contains("not simple"));
  const Polytope flat = Polytope::hull(rvs({"0,0", "1,1"}));
  CHECK_THROWS_WITH(delzant_xray(flat, edge_direction_weights(flat)), doctest::Contains("full-dimensional"));
}
