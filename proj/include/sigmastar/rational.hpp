// Exact rational scalars and small helpers shared across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmastar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "n", "-n", "n/d"; throws on malformed input.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

// Divides an integer vector by the gcd of its entries (no-op on the zero
// vector).  Used to canonicalize cone normals and primitive characters.
inline std::vector<Integer> primitive_vector(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, boost::multiprecision::abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// A rational or +infinity; models truncation heights.
struct ExtRational {
  std::optional<Rational> value;  // nullopt = +infinity

  static ExtRational infinity() { return {}; }
  static ExtRational of(Rational q) { return {std::move(q)}; }

  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.value == b.value;
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value < *b.value;
  }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) {
    return a == b || a < b;
  }

  friend ExtRational operator+(const ExtRational& a, const Rational& q) {
    if (a.is_infinite()) return a;
    return of(*a.value + q);
  }

  static ExtRational min(const ExtRational& a, const ExtRational& b) {
    return a < b ? a : b;
  }
};

inline std::string to_string(const ExtRational& h) {
  return h.is_infinite() ? "inf" : to_string(*h.value);
}

}  // namespace sigmastar
