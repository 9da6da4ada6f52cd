#pragma once

// Shared fixtures for the test programs.  Random inputs are drawn from a
// seeded generator so every run sees the same data.

#include "wallcross/xray.hpp"

#include <random>
#include <string>
#include <vector>

namespace wallcross::testing {

using Rng = std::mt19937_64;

/// "3/2, -1" -> (3/2, -1).
RatVector rv(const std::string& csv);
std::vector<RatVector> rvs(const std::vector<std::string>& csvs);

/// Uniform on a grid of step 1/den in [lo, hi].
Rational random_rational(Rng& rng, long lo, long hi, long den = 7);
std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Integer matrix of determinant +-1 (rows), a product of elementary moves.
std::vector<RatVector> random_unimodular(Rng& rng, std::size_t d);
RatVector apply_map(const std::vector<RatVector>& a, const RatVector& v);

/// Construction input reproducing x.
std::vector<StratumSpec> specs_of(const WeightedXray& x);

/// Image of x under y -> A y + t on walls and A on weights.
WeightedXray transform(const WeightedXray& x, const std::vector<RatVector>& a, const RatVector& t);

/// A valid rank-1 X-ray: one top segment and 2 to 6 fixed components,
/// symmetric under reflection in the midpoint with weights negated.
/// Endpoints have one-signed weights, interior components mixed signs and
/// possibly equal levels; components with a zero weight carry random seeds
/// in [-5, 5].
WeightedXray random_circle_xray(Rng& rng);

}  // namespace wallcross::testing
