#pragma once

// Structural validators for weighted X-rays.  Each returns every violation
// found, sorted canonically; an empty list means the axiom holds.

#include "wallcross/xray.hpp"

#include <compare>
#include <string>
#include <vector>

namespace wallcross {

enum class ViolationKind {
  MultipleMaximal,
  MinimalNotVertex,
  OrderIncompatible,
  FaceCondition,
  Uniqueness,
  DimensionDecrease,
  Consistency,
  VertexIndependence,
  DarbouxCone,
  DarbouxMissingCone,
  DarbouxDuplicateCone,
  SeedInvariant,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<StratumId> strata;
  std::string message;

  auto operator<=>(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Poset axioms: the face condition and uniqueness going up hold, walls
/// shrink strictly and respect the order, and one stratum is maximal.
std::vector<Violation> validate_poset(const WeightedXray& x);

/// Weight classes modulo Lin(wall(G)) agree at all vertices below G; the
/// weights of G along any F >= G do not depend on the chosen vertex.
std::vector<Violation> validate_consistency(const WeightedXray& x);

/// At every vertex the strata above it realize exactly the local model of
/// its weights.
std::vector<Violation> validate_darboux(const WeightedXray& x);

/// Isolated fixed points carry seeds (1, 1, 1).
std::vector<Violation> validate_vertex_data(const WeightedXray& x);

/// All of the above, merged and sorted.
std::vector<Violation> validate_all(const WeightedXray& x);

/// The tangent cone of `wall` at `apex` equals Cone(generators).
bool tangent_cone_equals(const Polytope& wall, const RatVector& apex,
                         const std::vector<RatVector>& generators);

/// The linear subsets of a weight family, as sorted index sets: every
/// alpha ∩ span(B) for B a subset of the distinct weight directions.
std::vector<std::vector<std::size_t>> linear_subsets(const std::vector<RatVector>& weights);

}  // namespace wallcross
