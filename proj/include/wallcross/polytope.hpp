#pragma once

// Exact convex polytopes in Q^d with dual V/H descriptions.
//
// A Polytope is stored by its irredundant vertices (sorted
// lexicographically), its affine span and the facet inequalities of the
// polytope inside that span.  Facet normals are ambient vectors; they are
// only meaningful for points of the span.

#include "wallcross/linalg.hpp"
#include "wallcross/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AffineSpan {
 public:
  AffineSpan() = default;
  AffineSpan(RatVector base_point, RowEchelon linear_part);

  /// Affine span of a nonempty point set.
  static AffineSpan of(std::span<const RatVector> points);

  const RatVector& base_point() const { return base_; }
  const RowEchelon& linear_part() const { return linear_; }
  const std::vector<RatVector>& linear_basis() const { return linear_.rows; }
  std::size_t dim() const { return linear_.rank(); }
  std::size_t ambient_dim() const { return base_.size(); }

  bool contains(const RatVector& x) const;
  bool contains_direction(const RatVector& v) const { return linear_.contains(v); }
  /// The linear part of `other` is a subspace of this one's.
  bool contains_linear(const AffineSpan& other) const;
  bool contains_affine(const AffineSpan& other) const;

  /// Coordinates of a point of the span: the entries of x - base at the
  /// pivot columns of the echelon basis.
  RatVector local_coords(const RatVector& x) const;
  RatVector from_local(const RatVector& y) const;

  bool operator==(const AffineSpan& other) const;

 private:
  RatVector base_;
  RowEchelon linear_;
};

struct Facet {
  RatVector normal;
  Rational offset;

  /// offset - normal . x; positive strictly inside.
  Rational slack(const RatVector& x) const { return offset - dot(normal, x); }
};

class Polytope {
 public:
  Polytope() = default;

  /// Convex hull.  Throws GeometryError("empty point set") on empty input.
  static Polytope hull(std::span<const RatVector> points);

  const std::vector<RatVector>& vertices() const { return vertices_; }
  const AffineSpan& span() const { return span_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t dim() const { return span_.dim(); }
  std::size_t ambient_dim() const { return span_.ambient_dim(); }

  bool contains(const RatVector& x) const;
  bool contains_relative_interior(const RatVector& x) const;
  bool contains(const Polytope& other) const;

  /// Facets of the polytope tight at x.
  std::vector<std::size_t> tight_facets(const RatVector& x) const;

  /// The tangent cone at a point x of the polytope contains direction u.
  bool tangent_cone_contains(const RatVector& x, const RatVector& u) const;

  bool operator==(const Polytope& other) const { return vertices_ == other.vertices_; }

  std::string to_string() const;

 private:
  std::vector<RatVector> vertices_;
  AffineSpan span_;
  std::vector<Facet> facets_;
};

/// All k-dimensional faces, sorted by vertex list.  faces(p, dim p) = {p}.
std::vector<Polytope> faces(const Polytope& p, std::size_t k);

/// Vertex centroid; lies in the relative interior.
RatVector relative_interior_point(const Polytope& p);

/// An affine functional, positive on one side of a separating hyperplane
/// inside an ambient affine space.
class SideFunctional {
 public:
  SideFunctional(RatVector normal, Rational offset)
      : normal_(std::move(normal)), offset_(std::move(offset)) {}

  Rational at_point(const RatVector& x) const { return dot(normal_, x) - offset_; }
  Rational on_direction(const RatVector& v) const { return dot(normal_, v); }
  int side_of_point(const RatVector& x) const { return sign(at_point(x)); }
  int side_of_direction(const RatVector& v) const { return sign(on_direction(v)); }

  const RatVector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  SideFunctional negated() const;

 private:
  RatVector normal_;
  Rational offset_;
};

/// Functional vanishing on `separator` (a codimension-1 affine subspace of
/// `ambient`) and positive at `toward`.  The normal is taken inside the
/// linear part of the ambient space.
SideFunctional side_functional(const AffineSpan& ambient, const AffineSpan& separator,
                               const RatVector& toward);

}  // namespace wallcross
