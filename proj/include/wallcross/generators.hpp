#pragma once

// Constructors for weighted X-rays.

#include "wallcross/polytope.hpp"
#include "wallcross/xray.hpp"

#include <map>
#include <string>
#include <vector>

namespace wallcross {

/// d x (n+1) rational matrix; column k is the image of the k-th fixed point.
struct ProjectionMatrix {
  std::vector<RatVector> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return rows.empty() ? 0 : rows.front().size(); }
  RatVector column(std::size_t k) const;

  /// Rows separated by ';', entries by ','; entries are rationals.
  static ProjectionMatrix parse(const std::string& text);
};

/// CP^n with the standard torus restricted along pi.  Column labels name
/// the vertices and subset strata ("{0,2}"); they default to indices.
WeightedXray cpn_xray(int n, const ProjectionMatrix& pi, const std::vector<std::string>& labels = {});

using VertexWeights = std::map<RatVector, std::vector<RatVector>, LexLess>;

/// Toric X-ray of a simple full-dimensional polytope: one stratum per face.
WeightedXray delzant_xray(const Polytope& p, const VertexWeights& weights);
/// At each vertex, the edge vectors to its neighbours.
VertexWeights edge_direction_weights(const Polytope& p);
Polytope standard_simplex(std::size_t d);
Polytope unit_cube(std::size_t d);

namespace presets {
WeightedXray cp3();
WeightedXray generic_cp4();
WeightedXray nongeneric_cp4();
inline constexpr const char* kCp3Matrix = "0,1,2,3";
inline constexpr const char* kGenericCp4Matrix = "0,4,2,8/5,12/5;0,0,4,3/4,19/10";
inline constexpr const char* kNongenericCp4Matrix = "0,4,0,3/2,5/2;0,0,4,5/2,3/2";
}  // namespace presets

}  // namespace wallcross
