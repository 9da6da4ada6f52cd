#pragma once

// Exact linear algebra over Q.

#include "wallcross/rational.hpp"

#include <optional>
#include <vector>

namespace wallcross {

/// Reduced row echelon form of a set of row vectors.  The nonzero rows form
/// the canonical basis of their span: two sets of vectors span the same
/// subspace iff their echelon forms are equal.
struct RowEchelon {
  std::size_t ambient_dim = 0;
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  /// Canonical representative of v modulo the row space; zero iff v lies in it.
  RatVector reduce(const RatVector& v) const;
  bool contains(const RatVector& v) const { return is_zero(reduce(v)); }

  /// Coefficients c with v = sum c_i rows_i, assuming v is in the span.
  RatVector coordinates(const RatVector& v) const;

  bool operator==(const RowEchelon& other) const {
    return ambient_dim == other.ambient_dim && rows == other.rows;
  }
};

RowEchelon row_echelon(std::vector<RatVector> vectors, std::size_t ambient_dim);
std::size_t rank(const std::vector<RatVector>& vectors, std::size_t ambient_dim);

/// Basis of {x : row . x = 0 for all rows}.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t ambient_dim);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b);

/// Orthogonal projection (standard dot product) of v onto span(basis).
RatVector project_onto(const std::vector<RatVector>& basis, const RatVector& v);

}  // namespace wallcross
