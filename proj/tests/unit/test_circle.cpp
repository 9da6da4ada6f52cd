#include "doctest.h"
#include "testing.hpp"
#include "wallcross/circle.hpp"
#include "wallcross/generators.hpp"

using namespace wallcross;
using namespace wallcross::testing;

namespace {

CircleComponent comp(Rational level, std::vector<std::int64_t> w, std::int64_t sig = 1, IntPolynomial p = {1}) {
  CircleComponent c;
  c.level = std::move(level);
  c.weights = std::move(w);
  c.seed_signature = sig;
  c.seed_poincare = std::move(p);
  return c;
}

}  // namespace

TEST_CASE("circle data of the circle example") {
  const CircleFixedData d = circle_data_from_xray(presets::cp3());
  REQUIRE(d.components.size() == 4);
  CHECK(d.levels() == rv("0, 1, 2, 3"));
  CHECK(d.components[1].forward() == 2);
  CHECK(d.components[1].backward() == 1);
  CHECK(signature_regular(d, Rational(1, 2)) == 1);
  CHECK(signature_regular(d, Rational(3, 2)) == 0);
  CHECK(signature_regular(d, Rational(5, 2)) == 1);
  CHECK(poincare_regular(d, Rational(3, 2)) == IntPolynomial({1, 0, 2, 0, 1}));
  CHECK(signature_regular(d, Rational(7, 2)) == 0);
  CHECK(signature_singular(d, Rational(1)) == 1);
  CHECK_THROWS_WITH(signature_regular(d, Rational(2)), doctest::Contains("singular level"));
}

TEST_CASE("singular signature from both sides") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const CircleFixedData d = circle_data_from_xray(random_circle_xray(rng));
    for (const auto& c : d.levels()) {
      const auto s = signature_singular_sides(d, c);
      CHECK(s.from_below == s.from_above);
    }
  }
}

TEST_CASE("tie components contribute nothing at their level") {
  CircleFixedData d;
  d.components = {comp(0, {1, 1}), comp(1, {1, -1}), comp(2, {-1, -1})};
  CHECK(signature_singular(d, Rational(0)) == 0);
  CHECK(signature_singular(d, Rational(1)) == 0);
  CHECK(signature_singular(d, Rational(2)) == 0);
}

TEST_CASE("zero weights are rejected") {
  CircleFixedData d;
  d.components = {comp(0, {1, 0})};
  CHECK_THROWS_AS(check_circle_data(d), XrayError);
  CHECK_THROWS_AS(signature_regular(d, Rational(1)), XrayError);
}

TEST_CASE("wall-crossing jump equals the difference of regular values") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const CircleFixedData d = circle_data_from_xray(random_circle_xray(rng));
    const auto levels = d.levels();
    for (std::size_t i = 1; i + 1 < levels.size(); ++i) {
      const Rational below = (levels[i - 1] + levels[i]) / 2;
      const Rational above = (levels[i] + levels[i + 1]) / 2;
      CHECK(wall_cross_delta(d, levels[i], Ring::Integer) ==
            IntPolynomial(signature_regular(d, above) - signature_regular(d, below)));
      CHECK(wall_cross_delta(d, levels[i], Ring::IntPolynomial) ==
            poincare_regular(d, above) - poincare_regular(d, below));
    }
  }
  CHECK_THROWS_WITH(wall_cross_delta(circle_data_from_xray(presets::cp3()), Rational(1, 2), Ring::Integer),
                    doctest::Contains("is not a wall"));
}

TEST_CASE("line restriction across an edge of the circle example") {
  const WeightedXray x = presets::cp3();
  const ChamberComplex complex(x);
  const InvariantTable sig = propagate(complex, signature_invariant());
  const InvariantTable poin = propagate(complex, poincare_invariant());
  const LineRestriction lr = restrict_to_line(complex, "{0,1,2,3}", 0, 1, sig, poin);
  REQUIRE(lr.data.components.size() == 1);
  CHECK(lr.data.components[0].forward() == 2);
  CHECK(lr.data.components[0].backward() == 1);
  CHECK(signature_regular(lr.data, lr.level_to) - signature_regular(lr.data, lr.level_from) == -1);
  const LineRestriction back = restrict_to_line(complex, "{0,1,2,3}", 1, 0, sig, poin);
  CHECK(back.data.components[0].forward() == 1);
  CHECK_THROWS_WITH(restrict_to_line(complex, "{0,1,2,3}", 0, 2, sig, poin), doctest::Contains("not adjacent"));
}
