#pragma once

// Weighted X-rays: a finite poset of strata, the moment image (wall) of each
// stratum, and tangent weights at the vertex strata.
//
// Weights are stored only at vertex strata, as vectors of Q^d.  Weights of
// a higher stratum are their classes modulo the linear span of its wall.

#include "wallcross/polynomial.hpp"
#include "wallcross/polytope.hpp"
#include "wallcross/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

using StratumId = std::string;

class XrayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VertexData {
  std::vector<RatVector> weights;  // n of them, with multiplicity
  std::int64_t seed_signature = 1;
  IntPolynomial seed_poincare{1};
  std::int64_t seed_euler = 1;

  bool isolated() const;  // all weights nonzero
  bool operator==(const VertexData&) const = default;
};

/// Construction input for one stratum.  `points` is any generating set of
/// the wall; `parents` need only contain the covering strata.
struct StratumSpec {
  StratumId id;
  std::vector<RatVector> points;
  std::vector<StratumId> parents;
  std::optional<VertexData> vertex_data;
};

struct Stratum {
  StratumId id;
  Polytope wall;
  std::vector<std::size_t> parents;   // as given (covering relations)
  std::vector<std::size_t> children;
  std::optional<VertexData> vertex_data;

  bool is_vertex() const { return wall.dim() == 0; }
};

class WeightedXray {
 public:
  /// Throws XrayError on structural defects: duplicate or unknown ids,
  /// cycles in the parent relation, vertex data on a positive-dimensional
  /// stratum or missing on a point stratum, wrong weight count or length.
  /// Axiom violations are not checked here; see validate.hpp.
  WeightedXray(int torus_rank, int half_dim, std::vector<StratumSpec> strata);

  int torus_rank() const { return torus_rank_; }
  int half_dim() const { return half_dim_; }
  std::size_t size() const { return strata_.size(); }
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum& stratum(std::size_t i) const { return strata_.at(i); }
  const Stratum& stratum(const StratumId& id) const { return strata_[index_of(id)]; }
  std::size_t index_of(const StratumId& id) const;
  const Polytope& wall(std::size_t i) const { return strata_.at(i).wall; }

  /// Strict order g < f (transitive closure of the parent relation).
  bool less(std::size_t g, std::size_t f) const { return less_[g][f]; }
  bool less_equal(std::size_t g, std::size_t f) const { return g == f || less_[g][f]; }
  std::vector<std::size_t> below(std::size_t f) const;  // strictly
  std::vector<std::size_t> above(std::size_t g) const;  // strictly
  /// Vertex strata v <= f, ordered by (point, id).
  std::vector<std::size_t> vertices_below(std::size_t f) const;
  /// Strata G < f with dim wall(G) = dim wall(f) - 1.
  std::vector<std::size_t> principal_subwalls(std::size_t f) const;
  std::vector<std::size_t> maximal() const;
  /// The unique maximal stratum; throws XrayError if there is not exactly one.
  std::size_t top() const;
  /// Strata ordered by (wall dimension, id).
  std::vector<std::size_t> by_dimension() const;

  /// Stable digest of the full content, for labelling derived tables.
  std::string fingerprint() const;

  /// Same strata with equal walls and vertex data, and the same order.
  bool operator==(const WeightedXray& other) const;

 private:
  int torus_rank_;
  int half_dim_;
  std::vector<Stratum> strata_;
  std::map<StratumId, std::size_t> index_;
  std::vector<std::vector<bool>> less_;
};

/// Weights at the first vertex below g lying in Lin(wall(f)); requires g <= f.
std::vector<RatVector> stratum_weights_in(const WeightedXray& x, std::size_t g, std::size_t f);
std::vector<RatVector> stratum_weights_in(const WeightedXray& x, const StratumId& g,
                                          const StratumId& f);
/// Same, as seen from a chosen vertex v <= g.
std::vector<RatVector> weights_at_vertex_in(const WeightedXray& x, std::size_t v, std::size_t f);

/// Weights at a vertex below f tangent to wall(f), with multiplicity.
int complex_dim_of_stratum(const WeightedXray& x, std::size_t f);
int complex_dim_of_stratum(const WeightedXray& x, const StratumId& f);

/// No stratum below f has a wall other than a face of wall(f), and the
/// stratum is toric (complex dimension equals wall dimension).
bool is_toric_structure_free(const WeightedXray& x, std::size_t f);
bool is_toric_structure_free(const WeightedXray& x, const StratumId& f);

}  // namespace wallcross
