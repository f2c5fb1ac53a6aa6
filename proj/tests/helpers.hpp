// Shared helpers for the unit and acceptance suites.
#pragma once

#include <random>

#include "sigmastar/laurent.hpp"
#include "sigmastar/queries.hpp"

namespace sigmastar::testing {

inline Rational random_rational(std::mt19937_64& rng, int lo = -6,
                                int hi = 6) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 5);
  return Rational(num(rng), den(rng));
}

// A rational character inside the cone, biased around chi: random rational
// perturbations with shrinking radius, then a random positive rescale.
inline std::optional<Character> sample_in_cone(const GroupContext& ctx,
                                               const SupportCone& cone,
                                               const Character& chi,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<int> scale_num(1, 5), scale_den(1, 5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational radius(1, 1 + attempt);
    Character psi = chi;
    for (auto& c : psi.coords)
      c += radius * random_rational(rng, -3, 3) / 3;
    if (!cone_contains(ctx, cone, psi)) continue;
    Rational q(scale_num(rng), scale_den(rng));
    return psi.scaled(q);  // cones are cones: positive scaling stays inside
  }
  return std::nullopt;
}

// ---- seeded random Laurent complexes (ranks <= 4, <= 3 terms, span <= 3) --

inline LaurentPoly<Rational> random_laurent(std::mt19937_64& rng,
                                            int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), expo(-1, 2),
      coeff(-3, 3);
  LaurentPoly<Rational> p;
  for (int i = 0, n = nterms(rng); i < n; ++i)
    p.add_term(expo(rng), Rational(coeff(rng)));
  return p;
}

inline LaurentMatrix<Rational> random_laurent_matrix(std::mt19937_64& rng,
                                                     size_t r, size_t c) {
  LaurentMatrix<Rational> m(r, std::vector<LaurentPoly<Rational>>(c));
  for (auto& row : m)
    for (auto& e : row) e = random_laurent(rng);
  return m;
}

// dd = 0 by construction: the degree-2 map factors through ker(d_1).
inline LaurentComplex<Rational> random_laurent_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> rk(1, 4);
  size_t r0 = rk(rng), r1 = rk(rng);
  LaurentMatrix<Rational> b1 = random_laurent_matrix(rng, r1, r0);
  SNFResult<Rational> s = snf(b1);
  size_t rank = s.diag.size(), kd = r1 - rank;
  size_t r2 = kd == 0 ? 0 : rk(rng);
  LaurentComplex<Rational> c;
  if (r2 > 0) {
    LaurentMatrix<Rational> k(kd, std::vector<LaurentPoly<Rational>>(r1));
    for (size_t i = 0; i < kd; ++i) k[i] = s.u[rank + i];
    LaurentMatrix<Rational> b2 =
        laurent_mat_mul(random_laurent_matrix(rng, r2, kd), k);
    c.ranks = {r0, r1, r2};
    c.boundaries = {LaurentMatrix<Rational>{}, b1, b2};
  } else {
    c.ranks = {r0, r1};
    c.boundaries = {LaurentMatrix<Rational>{}, b1};
  }
  c.validate();
  return c;
}

}  // namespace sigmastar::testing
