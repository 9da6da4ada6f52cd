#include "wallcross/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wallcross {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

RatVector zero_vector(std::size_t dim) { return RatVector(dim, Rational(0)); }

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scale(const RatVector& a, const Rational& s) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

int sign(const Rational& q) { return sgn(q); }

RatVector centroid(std::span<const RatVector> points) {
  if (points.empty()) throw std::invalid_argument("centroid of empty point set");
  RatVector acc = zero_vector(points.front().size());
  for (const auto& p : points) acc = add(acc, p);
  return scale(acc, Rational(1, static_cast<unsigned long>(points.size())));
}

RatVector primitive(const RatVector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  mpz_class g = 0;
  for (const auto& x : v) {
    const mpz_class scaled = x.get_num() * (lcm_den / x.get_den());
    g = gcd(g, scaled);
  }
  if (g == 0) return v;
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(mpz_class(v[i].get_num() * (lcm_den / v[i].get_den()) / g));
  }
  return out;
}

std::strong_ordering lex_compare(const RatVector& a, const RatVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace wallcross
