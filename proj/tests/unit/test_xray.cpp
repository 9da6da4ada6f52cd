#include "doctest.h"
#include "testing.hpp"
#include "wallcross/generators.hpp"
#include "wallcross/xray.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

StratumSpec vertex(const std::string& id, const std::string& at, std::vector<std::string> parents,
                   const std::vector<std::string>& weights) {
  VertexData vd;
  vd.weights = rvs(weights);
  return {id, {rv(at)}, std::move(parents), vd};
}

}  // namespace

TEST_CASE("construction rejects structural defects") {
  const auto top = StratumSpec{"top", rvs({"0", "1"}), {}, std::nullopt};
  CHECK_THROWS_WITH(WeightedXray(1, 1, {top, vertex("a", "0", {"top"}, {"1"}), vertex("a", "1", {"top"}, {"-1"})}),
                    doctest::Contains("duplicate"));
  CHECK_THROWS_WITH(WeightedXray(1, 1, {top, vertex("a", "0", {"nope"}, {"1"})}), doctest::Contains("unknown"));
  CHECK_THROWS_WITH(WeightedXray(1, 2, {top, vertex("a", "0", {"top"}, {"1"})}),
                    doctest::Contains("vertex 'a' carries 1 weights, expected 2"));
  CHECK_THROWS_WITH(WeightedXray(1, 1, {top, StratumSpec{"a", {rv("0")}, {"top"}, std::nullopt}}),
                    doctest::Contains("no vertex data"));
  auto bad_top = top;
  bad_top.vertex_data = VertexData{};
  CHECK_THROWS(WeightedXray(1, 1, {bad_top}));
  CHECK_THROWS_WITH(WeightedXray(1, 1, {StratumSpec{"x", rvs({"0", "1"}), {"y"}, std::nullopt},
                                        StratumSpec{"y", rvs({"0", "1"}), {"x"}, std::nullopt}}),
                    doctest::Contains("cycle"));
  CHECK_THROWS_WITH(WeightedXray(1, 1, {StratumSpec{"x", rvs({"0, 1"}), {}, std::nullopt}}),
                    doctest::Contains("length"));
}

TEST_CASE("order is the transitive closure of the parent relation") {
  const WeightedXray x = presets::nongeneric_cp4();
  const auto t = x.index_of("{t}");
  const auto diag = x.index_of("{t,q,r,s}");
  const auto top = x.index_of("{p,t,q,r,s}");
  CHECK(x.less(t, diag));
  CHECK(x.less(diag, top));
  CHECK(x.less(t, top));
  CHECK_FALSE(x.less(top, t));
  CHECK(x.top() == top);
  CHECK(x.principal_subwalls(diag).size() == 4);
}

TEST_CASE("weights of a stratum inside another") {
  const WeightedXray cp3 = presets::cp3();
  CHECK(stratum_weights_in(cp3, "{0}", "{0}").empty());

  const WeightedXray g = presets::generic_cp4();
  const auto along = stratum_weights_in(g, "{0}", "{0,1}");
  CHECK(along == rvs({"4, 0"}));

  const WeightedXray ng = presets::nongeneric_cp4();
  const auto all = stratum_weights_in(ng, "{t,q,r,s}", "{p,t,q,r,s}");
  CHECK(all.size() == 4);
  CHECK_THROWS_WITH(stratum_weights_in(ng, "{p,t,q,r,s}", "{t}"), doctest::Contains("not below"));
}

TEST_CASE("complex dimensions of strata") {
  const WeightedXray ng = presets::nongeneric_cp4();
  CHECK(complex_dim_of_stratum(ng, "{t}") == 0);
  CHECK(complex_dim_of_stratum(ng, "{t,q,r,s}") == 3);
  CHECK(complex_dim_of_stratum(ng, "{p,t,q,r,s}") == 4);
  CHECK(complex_dim_of_stratum(presets::generic_cp4(), "{0,1,2,3,4}") == 4);
}

TEST_CASE("structure-free toric strata") {
  const WeightedXray g = presets::generic_cp4();
  for (const auto& s : g.strata()) {
    if (s.wall.dim() <= 1) CHECK(is_toric_structure_free(g, s.id));
  }
  CHECK_FALSE(is_toric_structure_free(g, "{0,1,2,3,4}"));
  const WeightedXray ng = presets::nongeneric_cp4();
  CHECK_FALSE(is_toric_structure_free(ng, "{t,q,r,s}"));
  CHECK(is_toric_structure_free(ng, "{p,t}"));
  CHECK(is_toric_structure_free(ng, "{r}"));
}

TEST_CASE("complex dimension matches at every vertex below a stratum") {
  for (const auto& x : {presets::cp3(), presets::generic_cp4(), presets::nongeneric_cp4()}) {
    for (std::size_t f = 0; f < x.size(); ++f) {
      const int expect = complex_dim_of_stratum(x, f);
      for (auto v : x.vertices_below(f)) CHECK(static_cast<int>(weights_at_vertex_in(x, v, f).size()) == expect);
    }
    CHECK(complex_dim_of_stratum(x, x.top()) == x.half_dim());
  }
}

TEST_CASE("fingerprints distinguish content") {
  CHECK(presets::cp3().fingerprint() == presets::cp3().fingerprint());
  CHECK(presets::cp3().fingerprint() != presets::nongeneric_cp4().fingerprint());
  CHECK(presets::cp3() == presets::cp3());
}
