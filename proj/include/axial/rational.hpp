#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "axial/error.hpp"

namespace axial {

// mpq_class keeps numerator/denominator canonical (gcd 1, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" with q != 0. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(text) + "\"");
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational q(canonical, 10);
  q.canonicalize();
  return q;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b.at(i);
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b.at(i);
  return r;
}

inline Vector scale(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

// y += s * x
inline void axpy(const Rational& s, const Vector& x, Vector& y) {
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

inline Rational dot(const Vector& a, const Vector& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) r += a[i] * b.at(i);
  return r;
}

}  // namespace axial
