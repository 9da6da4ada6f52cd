#pragma once

// Recursive invariants of subchambers, propagated by wall crossing.
//
// Convention for every wall-crossing function: the first argument counts the
// weights pointing toward the destination subchamber, the second those
// pointing back.

#include "wallcross/arrangement.hpp"
#include "wallcross/polynomial.hpp"
#include "wallcross/xray.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

std::int64_t w_signature(int forward, int backward);
IntPolynomial w_poincare(int forward, int backward);
std::int64_t w_euler(int forward, int backward);

/// Integer invariants are stored as constant polynomials.  The coefficient
/// ring must be commutative.
enum class Ring { Integer, IntPolynomial };

struct RecursiveInvariantSpec {
  std::string name;
  Ring ring = Ring::Integer;
  std::function<IntPolynomial(int forward, int backward)> wall_cross;
  std::function<IntPolynomial(const VertexData&)> seed;
};

RecursiveInvariantSpec signature_invariant();
RecursiveInvariantSpec poincare_invariant();
RecursiveInvariantSpec euler_invariant();

class PathDependenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantRow {
  StratumId stratum;
  std::size_t subchamber = 0;
  RatVector rep;
  IntPolynomial value;
};

class InvariantTable {
 public:
  InvariantTable() = default;
  InvariantTable(std::string name, Ring ring, std::string fingerprint, std::vector<InvariantRow> rows);

  const std::string& name() const { return name_; }
  Ring ring() const { return ring_; }
  const std::string& fingerprint() const { return fingerprint_; }
  /// Ordered by (stratum id, subchamber index).
  const std::vector<InvariantRow>& rows() const { return rows_; }
  const IntPolynomial& value(const StratumId& stratum, std::size_t subchamber) const;
  std::int64_t integer_value(const StratumId& stratum, std::size_t subchamber) const;
  /// Values of one stratum's subchambers in index order.
  std::vector<IntPolynomial> values(const StratumId& stratum) const;

 private:
  std::string name_;
  Ring ring_ = Ring::Integer;
  std::string fingerprint_;
  std::vector<InvariantRow> rows_;
  std::map<StratumId, std::size_t> first_row_;
};

/// "3" for integer tables, "1 + t^2" for polynomial ones.
std::string format_value(const IntPolynomial& v, Ring ring);

/// Sum over the edge's separators of wall_cross(f, b) * I(G, R).
IntPolynomial edge_delta(const InvariantTable& table, const RecursiveInvariantSpec& spec,
                         const CrossingEdge& edge);

/// Vertex strata get their seeds; every other stratum is filled by a
/// breadth-first pass over its crossing graph starting at EXTERIOR = 0,
/// after which every edge is checked.  Throws PathDependenceError on an
/// inconsistent cycle and XrayError on an unreachable subchamber.
InvariantTable propagate(const ChamberComplex& complex, const RecursiveInvariantSpec& spec);
InvariantTable propagate(const WeightedXray& x, const RecursiveInvariantSpec& spec);

struct EdgeMismatch {
  StratumId stratum;
  std::size_t from = kExterior;
  std::size_t to = kExterior;
  IntPolynomial expected_delta;
  IntPolynomial actual_delta;
};

/// Every crossing edge of every stratum against the table values.
std::vector<EdgeMismatch> cycle_mismatches(const ChamberComplex& complex, const InvariantTable& table,
                                           const RecursiveInvariantSpec& spec);

std::string node_name(std::size_t subchamber);

}  // namespace wallcross
