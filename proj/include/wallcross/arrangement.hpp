#pragma once

// Subchambers of walls and the crossing graphs between them.
//
// The regular set of a wall phi(F) is phi(F) minus the walls of all strata
// below F.  It is computed by cutting phi(F) with the affine spans of the
// principal subwalls (codimension one) and merging neighbouring cells whose
// shared facet is not covered by any subwall.

#include "wallcross/polytope.hpp"
#include "wallcross/xray.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace wallcross {

inline constexpr std::size_t kExterior = std::numeric_limits<std::size_t>::max();

struct Subchamber {
  StratumId host;
  Polytope cell;  // closure of the open subchamber
  RatVector rep;  // relative interior point, on no subwall
};

struct Separator {
  StratumId stratum;        // principal subwall G
  std::size_t subchamber;   // index into the subchambers of G
  int forward = 0;          // weights of G along F pointing toward `to`
  int backward = 0;

  auto operator<=>(const Separator&) const = default;
};

struct CrossingEdge {
  std::size_t from = kExterior;
  std::size_t to = kExterior;
  RatVector facet_rep;
  std::vector<Separator> separators;
  /// Vanishes on the separating hyperplane, positive on the `to` side.
  SideFunctional crossing{RatVector{}, Rational(0)};

  CrossingEdge reversed() const;
};

struct CrossingGraph {
  StratumId host;
  std::size_t num_subchambers = 0;
  std::vector<CrossingEdge> edges;
  std::vector<std::string> warnings;
};

/// Cell-level decomposition of one wall.
struct WallDecomposition {
  std::size_t stratum = 0;
  std::vector<Subchamber> subchambers;
  std::vector<Polytope> cells;              // ambient coordinates
  std::vector<std::size_t> cell_component;  // subchamber index per cell

  struct Piece {
    std::size_t cell = 0;
    std::size_t other_cell = kExterior;  // kExterior for boundary pieces
    RatVector rep;                       // centroid of the shared facet
  };
  /// Facets between cells of different subchambers, and boundary facets.
  std::vector<Piece> pieces;
};

WallDecomposition decompose_wall(const WeightedXray& x, std::size_t f);

std::vector<Subchamber> subchambers(const WeightedXray& x, const StratumId& f);
CrossingGraph crossing_graph(const WeightedXray& x, const StratumId& f);
/// Index of the subchamber of f containing q.  Throws XrayError if q is not
/// in the wall or lies on a subwall of f.
std::size_t locate(const WeightedXray& x, const StratumId& f, const RatVector& q);

/// All subchambers and crossing graphs of an X-ray, computed once.  Keeps a
/// reference to the X-ray, which must outlive it.
class ChamberComplex {
 public:
  explicit ChamberComplex(const WeightedXray& x);

  const WeightedXray& xray() const { return *xray_; }
  const WallDecomposition& decomposition(std::size_t f) const { return decomps_.at(f); }
  const std::vector<Subchamber>& subchambers(std::size_t f) const { return decomps_.at(f).subchambers; }
  const CrossingGraph& crossing_graph(std::size_t f) const;
  std::size_t locate(std::size_t f, const RatVector& q) const;

 private:
  const WeightedXray* xray_;
  std::vector<WallDecomposition> decomps_;
  std::vector<std::optional<CrossingGraph>> graphs_;
};

/// Subchamber of `d` containing q (used by locate); same errors.
std::size_t locate_in(const WeightedXray& x, const WallDecomposition& d, const RatVector& q);

/// Crossing graph of f given decompositions of f and of its principal subwalls.
CrossingGraph build_crossing_graph(const WeightedXray& x, std::size_t f,
                                   const WallDecomposition& own,
                                   const std::vector<const WallDecomposition*>& by_stratum);

}  // namespace wallcross
