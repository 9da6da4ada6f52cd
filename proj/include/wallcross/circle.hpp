#pragma once

// Localization formulas for circle actions, independent of the recursive
// engine.

#include "wallcross/arrangement.hpp"
#include "wallcross/engine.hpp"
#include "wallcross/polynomial.hpp"
#include "wallcross/rational.hpp"

#include <cstdint>
#include <vector>

namespace wallcross {

struct CircleComponent {
  Rational level;
  std::vector<std::int64_t> weights;  // nonzero
  std::int64_t seed_signature = 1;
  IntPolynomial seed_poincare{1};

  int forward() const;      // positive weights
  int backward() const;     // negative weights
  int normal_rank() const;  // forward + backward
};

struct CircleFixedData {
  std::vector<CircleComponent> components;

  /// Distinct levels, increasing.
  std::vector<Rational> levels() const;
  bool is_level(const Rational& a) const;
};

/// Throws XrayError if some weight is zero.
void check_circle_data(const CircleFixedData& data);

std::int64_t signature_regular(const CircleFixedData& data, const Rational& a);
IntPolynomial poincare_regular(const CircleFixedData& data, const Rational& a);
IntPolynomial wall_cross_delta(const CircleFixedData& data, const Rational& c, Ring ring);

struct SingularSignature {
  std::int64_t from_below = 0;  // regular value below c plus the b >= f components
  std::int64_t from_above = 0;  // regular value above c minus the b < f components
  std::int64_t value() const { return from_below; }
};

/// Both one-sided expressions; they always agree when the convention is
/// right.
SingularSignature signature_singular_sides(const CircleFixedData& data, const Rational& c);
/// Throws std::logic_error if the sides disagree or a tie component
/// contributes.
std::int64_t signature_singular(const CircleFixedData& data, const Rational& c);

/// Rank-one X-ray as circle data: every vertex becomes a component at its
/// coordinate, with the signs of its nonzero weights.
CircleFixedData circle_data_from_xray(const WeightedXray& x);

struct LineRestriction {
  CircleFixedData data;      // all components at level 0
  Rational level_from{-1};   // a regular level on the p1 side
  Rational level_to{1};
};

/// Residual circle across the edge p1 -> p2 of f's crossing graph.  p1 may
/// be kExterior.  Seeds come from the supplied propagated tables.
LineRestriction restrict_to_line(const ChamberComplex& complex, const StratumId& f, std::size_t p1,
                                 std::size_t p2, const InvariantTable& sig, const InvariantTable& poin);

}  // namespace wallcross
