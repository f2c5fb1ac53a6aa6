// Abelianization data: Smith normal form of the relator exponent matrix,
// and the projection of generators onto the free part of H_1.
#pragma once

#include <vector>

#include "sigmastar/errors.hpp"
#include "sigmastar/presentation.hpp"
#include "sigmastar/rational.hpp"
#include "sigmastar/word.hpp"

namespace sigmastar {

using IntMatrix = std::vector<std::vector<Integer>>;

// Smith normal form over Z.  Row/column operations are unimodular; the
// diagonal entries divide in sequence.  Only V is tracked (column ops),
// which is all the abelianization needs.
struct ZSmithResult {
  IntMatrix d;          // diagonal form, same shape as input
  IntMatrix v;          // cols x cols, unimodular: d = u * a * v
  std::vector<Integer> diag;  // nonzero invariant factors, d1 | d2 | ...
};

inline ZSmithResult z_smith(IntMatrix a, size_t rows, size_t cols) {
  IntMatrix v(cols, std::vector<Integer>(cols, 0));
  for (size_t j = 0; j < cols; ++j) v[j][j] = 1;

  auto col_addmul = [&](size_t dst, size_t src, const Integer& q) {
    for (size_t i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
    for (size_t i = 0; i < cols; ++i) v[i][dst] += q * v[i][src];
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
  };
  auto col_neg = [&](size_t x) {
    for (size_t i = 0; i < rows; ++i) a[i][x] = -a[i][x];
    for (size_t i = 0; i < cols; ++i) v[i][x] = -v[i][x];
  };
  auto row_addmul = [&](size_t dst, size_t src, const Integer& q) {
    for (size_t j = 0; j < cols; ++j) a[dst][j] += q * a[src][j];
  };

  size_t k = 0;
  while (k < rows && k < cols) {
    // Find a pivot of minimal absolute value in the remaining block.
    size_t pi = k, pj = k;
    Integer best = 0;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j) {
        Integer m = boost::multiprecision::abs(a[i][j]);
        if (m != 0 && (best == 0 || m < best)) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != k) std::swap(a[pi], a[k]);
    if (pj != k) col_swap(pj, k);
    if (a[k][k] < 0) col_neg(k);

    bool again = false;
    for (size_t i = k + 1; i < rows; ++i) {
      Integer q = a[i][k] / a[k][k];
      if (q != 0) row_addmul(i, k, -q);
      if (a[i][k] != 0) again = true;
    }
    for (size_t j = k + 1; j < cols; ++j) {
      Integer q = a[k][j] / a[k][k];
      if (q != 0) col_addmul(j, k, -q);
      if (a[k][j] != 0) again = true;
    }
    if (again) continue;  // remainders left; repeat with a smaller pivot

    // Enforce divisibility: fold any non-multiple into column k.
    bool fixed = true;
    for (size_t i = k + 1; i < rows && fixed; ++i)
      for (size_t j = k + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[k][k] != 0) {
          col_addmul(k, j, 1);
          fixed = false;
        }
    if (fixed) ++k;
  }

  ZSmithResult r;
  r.d = std::move(a);
  r.v = std::move(v);
  for (size_t i = 0; i < k; ++i) r.diag.push_back(r.d[i][i]);
  return r;
}

struct AbelianizationData {
  size_t free_rank = 0;
  std::vector<Integer> torsion_factors;  // entries > 1, dividing in sequence
  // generator -> coordinates of its image in the free part of H_1
  std::vector<std::vector<Integer>> proj_free;
  size_t ngens = 0;

  std::vector<Integer> project(const Word& w) const {
    std::vector<Integer> x(free_rank, 0);
    for (Letter l : w) {
      const auto& row = proj_free[gen_of(l)];
      if (is_inverse(l))
        for (size_t i = 0; i < free_rank; ++i) x[i] -= row[i];
      else
        for (size_t i = 0; i < free_rank; ++i) x[i] += row[i];
    }
    return x;
  }
};

inline std::vector<Integer> exponent_vector(const Word& w, size_t ngens) {
  std::vector<Integer> e(ngens, 0);
  for (Letter l : w) e[gen_of(l)] += is_inverse(l) ? -1 : 1;
  return e;
}

inline AbelianizationData abelianize(const Presentation& p) {
  size_t g = p.generators.size(), r = p.relators.size();
  IntMatrix m(std::max<size_t>(r, 1), std::vector<Integer>(g, 0));
  for (size_t i = 0; i < r; ++i) m[i] = exponent_vector(p.relators[i], g);

  ZSmithResult s = z_smith(m, std::max<size_t>(r, 1), g);
  size_t rank = s.diag.size();

  AbelianizationData ab;
  ab.ngens = g;
  ab.free_rank = g - rank;
  for (const auto& d : s.diag)
    if (d > 1) ab.torsion_factors.push_back(d);

  // In the V-basis the relator lattice is spanned by d_i * e_i, so the free
  // part of the quotient reads off the last columns of V.
  ab.proj_free.assign(g, std::vector<Integer>(ab.free_rank, 0));
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < ab.free_rank; ++j)
      ab.proj_free[i][j] = s.v[i][rank + j];
  return ab;
}

}  // namespace sigmastar
