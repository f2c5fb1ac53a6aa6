// Rational characters G -> R, stored on the free part of H_1.
#pragma once

#include <vector>

#include "sigmastar/abelian.hpp"
#include "sigmastar/errors.hpp"
#include "sigmastar/rational.hpp"
#include "sigmastar/word.hpp"

namespace sigmastar {

struct Character {
  std::vector<Rational> coords;  // length = abelianization free rank

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }

  Character negated() const {
    Character n = *this;
    for (auto& c : n.coords) c = -c;
    return n;
  }

  Character scaled(const Rational& q) const {
    Character n = *this;
    for (auto& c : n.coords) c *= q;
    return n;
  }

  Rational pair(const std::vector<Integer>& v) const {
    Rational h = 0;
    for (size_t i = 0; i < coords.size(); ++i)
      h += coords[i] * Rational(v[i]);
    return h;
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.coords == b.coords;
  }
};

inline Character character_from_vector(const AbelianizationData& ab,
                                       std::vector<Rational> v) {
  if (v.size() != ab.free_rank)
    fail(errc::dimension_mismatch,
         "character has " + std::to_string(v.size()) +
             " coordinates, free rank is " + std::to_string(ab.free_rank));
  return Character{std::move(v)};
}

inline Rational height(const AbelianizationData& ab, const Character& chi,
                       const Word& w) {
  return chi.pair(ab.project(w));
}

// The least positive rational q with (chi/q) primitive integral: q generates
// the value group chi(G) <= Q.  Zero characters have no scale.
inline Rational integral_scale(const AbelianizationData& ab,
                               const Character& chi) {
  if (chi.is_zero()) fail(errc::zero_character, "zero character has no scale");
  // chi(G) is generated by the values on the generators: gcd of numerators
  // over the lcm of denominators.
  Integer den = 1;
  for (size_t g = 0; g < ab.ngens; ++g) {
    Rational val = chi.pair(ab.proj_free[g]);
    den = den / gcd(den, denominator(val)) * denominator(val);
  }
  Integer num = 0;
  for (size_t g = 0; g < ab.ngens; ++g) {
    Rational val = chi.pair(ab.proj_free[g]) * Rational(den);
    num = gcd(num, boost::multiprecision::abs(numerator(val)));
  }
  return Rational(num, den);
}

// Rescales so the value group is exactly Z.
inline Character primitive_integral(const AbelianizationData& ab,
                                    const Character& chi) {
  Rational s = integral_scale(ab, chi);
  Character out = chi;
  for (auto& c : out.coords) c /= s;
  return out;
}

}  // namespace sigmastar
