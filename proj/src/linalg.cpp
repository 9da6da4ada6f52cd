#include "wallcross/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wallcross {

RowEchelon row_echelon(std::vector<RatVector> m, std::size_t ambient_dim) {
  RowEchelon out;
  out.ambient_dim = ambient_dim;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ambient_dim && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < ambient_dim; ++c) m[r][c] -= factor * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

RatVector RowEchelon::reduce(const RatVector& v) const {
  RatVector r = v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational factor = r[pivots[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient_dim; ++c) r[c] -= factor * rows[i][c];
  }
  return r;
}

RatVector RowEchelon::coordinates(const RatVector& v) const {
  RatVector c(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) c[i] = v[pivots[i]];
  return c;
}

std::size_t rank(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  return row_echelon(vectors, ambient_dim).rank();
}

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t ambient_dim) {
  const RowEchelon e = row_echelon(rows, ambient_dim);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < ambient_dim; ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zero_vector(ambient_dim);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

RatVector project_onto(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) return zero_vector(v.size());
  const std::size_t k = basis.size();
  std::vector<RatVector> gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto coeff = solve_square(std::move(gram), std::move(rhs));
  if (!coeff) throw std::invalid_argument("project_onto: basis is linearly dependent");
  RatVector out = zero_vector(v.size());
  for (std::size_t i = 0; i < k; ++i) out = add(out, scale(basis[i], (*coeff)[i]));
  return out;
}

}  // namespace wallcross
