#pragma once

// Exact rational scalars and vectors.
//
// Rational is GMP's mpq_class: arbitrary precision, canonical (positive
// denominator, reduced) after every operation.  The two-argument
// constructor does not canonicalize.  RatVector is a plain coordinate
// vector; vector arithmetic is exposed as named free functions so that the
// expression templates of gmpxx never leak into `auto` deductions.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// "num/den", with the denominator omitted when it is 1 ("3/2", "-4").
std::string to_string(const Rational& q);

/// Parses "num/den" or "num" (optional sign, decimal digits only).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "(3/2, -4)"
std::string to_string(const RatVector& v);

RatVector zero_vector(std::size_t dim);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rational& s);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
int sign(const Rational& q);

/// Arithmetic mean of a nonempty list of points.
RatVector centroid(std::span<const RatVector> points);

/// Positive multiple of v with coprime integer entries; zero stays zero.
RatVector primitive(const RatVector& v);

/// Lexicographic three-way comparison of equal-length vectors.
std::strong_ordering lex_compare(const RatVector& a, const RatVector& b);

struct LexLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

double to_double(const Rational& q);

}  // namespace wallcross
