#pragma once

// One-variable polynomials with integer coefficients.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wallcross {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  bool operator==(const GaussianInt&) const = default;
};

/// Coefficient list indexed by degree, never with trailing zeros; the zero
/// polynomial has no coefficients.  Arithmetic throws std::overflow_error
/// instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::int64_t constant);  // NOLINT: integers embed as constants
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial monomial(std::int64_t coeff, std::size_t degree);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// The constant value; throws std::domain_error if the degree is positive.
  std::int64_t as_integer() const;

  std::int64_t evaluate(std::int64_t t) const;
  GaussianInt evaluate(GaussianInt t) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  /// "1 + 2t^2 + t^4", "0", "-t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace wallcross
