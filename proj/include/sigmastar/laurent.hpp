// The univariate untwisted oracle: exact linear algebra over k[t,t^-1]
// (a Euclidean domain) and its fraction field.  Completely decides Novikov
// acyclicity for complexes over k[Z], independently of the engine.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "sigmastar/errors.hpp"
#include "sigmastar/fields.hpp"

namespace sigmastar {

template <typename F>
struct LaurentPoly {
  std::map<long, F> coeffs;  // exponent -> nonzero coefficient

  bool is_zero() const { return coeffs.empty(); }
  long low() const { return coeffs.begin()->first; }
  long high() const { return coeffs.rbegin()->first; }
  long span() const { return is_zero() ? -1 : high() - low(); }

  void add_term(long e, const F& c) {
    if (field_traits<F>::is_zero(c)) return;
    auto [it, fresh] = coeffs.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (field_traits<F>::is_zero(it->second)) coeffs.erase(it);
    }
  }

  static LaurentPoly term(long e, const F& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly one() { return term(0, field_traits<F>::one()); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs) out.add_term(e, c);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs) out.add_term(e, -c);
    return out;
  }
  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs) out.coeffs.emplace(e, -c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs)
      for (const auto& [eb, cb] : b.coeffs) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs == b.coeffs;
  }

  // Multiply by the unit c * t^e.
  LaurentPoly shifted(long e, const F& c) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : coeffs) out.coeffs.emplace(ea + e, ca * c);
    return out;
  }

  // Canonical associate: monic with lowest exponent zero.
  LaurentPoly unit_normalized() const {
    if (is_zero()) return *this;
    return shifted(-low(), field_traits<F>::inverse(coeffs.rbegin()->second));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
      if (!first) os << " + ";
      first = false;
      os << field_traits<F>::str(c);
      if (e != 0) os << "*" << var << "^" << e;
    }
    return os.str();
  }
};

// a = q*b + r with span(r) < span(b); Euclidean division on the polynomial
// parts after factoring out powers of t.
template <typename F>
std::pair<LaurentPoly<F>, LaurentPoly<F>> laurent_divmod(
    const LaurentPoly<F>& a, const LaurentPoly<F>& b) {
  if (b.is_zero()) fail(errc::zero_element, "laurent division by zero");
  if (a.is_zero()) return {a, a};
  LaurentPoly<F> r = a.shifted(-a.low(), field_traits<F>::one());
  LaurentPoly<F> bb = b.shifted(-b.low(), field_traits<F>::one());
  LaurentPoly<F> q;
  long degb = bb.high();
  F leadb = bb.coeffs.rbegin()->second;
  while (!r.is_zero() && r.high() >= degb) {
    long e = r.high() - degb;
    F c = r.coeffs.rbegin()->second / leadb;
    q.add_term(e, c);
    r = r - bb.shifted(e, c);
  }
  // undo the shifts: a = t^la ((q) bb + r) = (t^{la-lb} q) b + t^la r
  return {q.shifted(a.low() - b.low(), field_traits<F>::one()),
          r.shifted(a.low(), field_traits<F>::one())};
}

template <typename F>
LaurentPoly<F> laurent_gcd(LaurentPoly<F> a, LaurentPoly<F> b) {
  while (!b.is_zero()) {
    auto [q, r] = laurent_divmod(a, b);
    a = b;
    b = r;
  }
  return a.unit_normalized();
}

template <typename F>
bool laurent_divides(const LaurentPoly<F>& d, const LaurentPoly<F>& a) {
  if (a.is_zero()) return true;
  if (d.is_zero()) return false;
  return laurent_divmod(a, d).second.is_zero();
}

template <typename F>
using LaurentMatrix = std::vector<std::vector<LaurentPoly<F>>>;

template <typename F>
LaurentMatrix<F> laurent_identity(size_t n) {
  LaurentMatrix<F> m(n, std::vector<LaurentPoly<F>>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly<F>::one();
  return m;
}

template <typename F>
LaurentMatrix<F> laurent_mat_mul(const LaurentMatrix<F>& a,
                                 const LaurentMatrix<F>& b) {
  size_t n = a.size(), k = a.empty() ? 0 : a[0].size();
  size_t m = b.empty() ? 0 : b[0].size();
  LaurentMatrix<F> out(n, std::vector<LaurentPoly<F>>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  return out;
}

// Smith normal form over k[t,t^-1]: u * a * v = d with u, v unimodular and
// canonical invariant factors d1 | d2 | ...  u_inv tracks the inverse of u,
// which the torsion test below needs.
template <typename F>
struct SNFResult {
  LaurentMatrix<F> d, u, v, u_inv;
  std::vector<LaurentPoly<F>> diag;  // nonzero invariant factors
};

template <typename F>
SNFResult<F> snf(const LaurentMatrix<F>& input) {
  size_t rows = input.size(), cols = rows ? input[0].size() : 0;
  SNFResult<F> res;
  res.d = input;
  res.u = laurent_identity<F>(rows);
  res.u_inv = laurent_identity<F>(rows);
  res.v = laurent_identity<F>(cols);
  auto& a = res.d;

  auto row_addmul = [&](size_t dst, size_t src, const LaurentPoly<F>& q) {
    for (size_t j = 0; j < cols; ++j) a[dst][j] = a[dst][j] - q * a[src][j];
    for (size_t j = 0; j < rows; ++j)
      res.u[dst][j] = res.u[dst][j] - q * res.u[src][j];
    // (E^-1 has +q) applied on the right of u_inv: column src += q * column dst
    for (size_t i = 0; i < rows; ++i)
      res.u_inv[i][src] = res.u_inv[i][src] + res.u_inv[i][dst] * q;
  };
  auto row_swap = [&](size_t x, size_t y) {
    std::swap(a[x], a[y]);
    std::swap(res.u[x], res.u[y]);
    for (size_t i = 0; i < rows; ++i) std::swap(res.u_inv[i][x], res.u_inv[i][y]);
  };
  auto row_scale = [&](size_t x, long e, const F& c) {  // by unit c t^e
    for (size_t j = 0; j < cols; ++j) a[x][j] = a[x][j].shifted(e, c);
    for (size_t j = 0; j < rows; ++j) res.u[x][j] = res.u[x][j].shifted(e, c);
    F cinv = field_traits<F>::inverse(c);
    for (size_t i = 0; i < rows; ++i)
      res.u_inv[i][x] = res.u_inv[i][x].shifted(-e, cinv);
  };
  auto col_addmul = [&](size_t dst, size_t src, const LaurentPoly<F>& q) {
    for (size_t i = 0; i < rows; ++i) a[i][dst] = a[i][dst] - q * a[i][src];
    for (size_t i = 0; i < cols; ++i)
      res.v[i][dst] = res.v[i][dst] - res.v[i][src] * q;
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (size_t i = 0; i < cols; ++i) std::swap(res.v[i][x], res.v[i][y]);
  };

  size_t k = 0;
  while (k < rows && k < cols) {
    // minimal-span pivot in the remaining block
    long best = -1;
    size_t pi = k, pj = k;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (!a[i][j].is_zero() && (best < 0 || a[i][j].span() < best)) {
          best = a[i][j].span();
          pi = i;
          pj = j;
        }
    if (best < 0) break;
    if (pi != k) row_swap(pi, k);
    if (pj != k) col_swap(pj, k);

    bool clean = true;
    for (size_t i = k + 1; i < rows; ++i) {
      if (a[i][k].is_zero()) continue;
      auto [q, r] = laurent_divmod(a[i][k], a[k][k]);
      row_addmul(i, k, q);
      if (!a[i][k].is_zero()) clean = false;
    }
    for (size_t j = k + 1; j < cols; ++j) {
      if (a[k][j].is_zero()) continue;
      auto [q, r] = laurent_divmod(a[k][j], a[k][k]);
      col_addmul(j, k, q);
      if (!a[k][j].is_zero()) clean = false;
    }
    if (!clean) continue;  // remainders became smaller pivot candidates

    bool divisible = true;
    for (size_t i = k + 1; i < rows && divisible; ++i)
      for (size_t j = k + 1; j < cols && divisible; ++j)
        if (!laurent_divides(a[k][k], a[i][j])) {
          row_addmul(k, i, -LaurentPoly<F>::one());  // fold row i into row k
          divisible = false;
        }
    if (!divisible) continue;

    // canonicalize the pivot to monic, lowest exponent 0
    const auto& piv = a[k][k];
    row_scale(k, -piv.low(),
              field_traits<F>::inverse(piv.coeffs.rbegin()->second));
    ++k;
  }
  for (size_t i = 0; i < k; ++i) res.diag.push_back(a[i][i]);
  return res;
}

// ---- fraction field k(t) ----

template <typename F>
struct RationalFunction {
  LaurentPoly<F> num, den;  // den nonzero; reduced and unit-normalized

  static RationalFunction of(LaurentPoly<F> n, LaurentPoly<F> d) {
    RationalFunction r{std::move(n), std::move(d)};
    r.reduce();
    return r;
  }
  static RationalFunction of(LaurentPoly<F> n) {
    return {std::move(n), LaurentPoly<F>::one()};
  }

  bool is_zero() const { return num.is_zero(); }

  void reduce() {
    if (num.is_zero()) {
      den = LaurentPoly<F>::one();
      return;
    }
    LaurentPoly<F> g = laurent_gcd(num, den);
    num = laurent_divmod(num, g).first;
    den = laurent_divmod(den, g).first;
    // roll the unit into the numerator
    num = num.shifted(-den.low(),
                      field_traits<F>::inverse(den.coeffs.rbegin()->second));
    den = den.unit_normalized();
  }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return of(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return of(a.num * b.num, a.den * b.den);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero()) fail(errc::zero_element, "rational function division");
    return of(a.num * b.den, a.den * b.num);
  }
};

// Rank over k(t) by Gaussian elimination with rational-function entries.
template <typename F>
size_t fraction_field_rank(const LaurentMatrix<F>& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<RationalFunction<F>>> a(rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      a[i].push_back(RationalFunction<F>::of(m[i][j]));
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      RationalFunction<F> f = a[i][col] / a[rank][col];
      for (size_t j = col; j < cols; ++j)
        a[i][j] = a[i][j] - f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// A complex over k[t,t^-1] in row convention: boundaries[i] maps degree i
// to i-1 and has shape ranks[i] x ranks[i-1].
template <typename F>
struct LaurentComplex {
  std::vector<size_t> ranks;
  std::vector<LaurentMatrix<F>> boundaries;  // index 1..top

  size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }

  void validate() const {
    if (boundaries.size() != ranks.size())
      fail(errc::not_a_complex, "boundary count");
    for (size_t i = 1; i <= top(); ++i) {
      if (boundaries[i].size() != ranks[i])
        fail(errc::not_a_complex, "boundary rows");
      for (const auto& row : boundaries[i])
        if (row.size() != ranks[i - 1]) fail(errc::not_a_complex, "boundary cols");
    }
    for (size_t i = 1; i + 1 <= top(); ++i) {
      auto prod = laurent_mat_mul(boundaries[i + 1], boundaries[i]);
      for (const auto& row : prod)
        for (const auto& e : row)
          if (!e.is_zero()) fail(errc::not_a_complex, "dd != 0");
    }
  }
};

// Homology dimensions over the fraction field k(t); zero in every degree is
// exactly Novikov acyclicity in both directions for complexes over k[Z].
template <typename F>
std::vector<size_t> homology_dims_fraction_field(const LaurentComplex<F>& c) {
  c.validate();
  std::vector<size_t> dims(c.ranks.size());
  for (size_t i = 0; i < c.ranks.size(); ++i) {
    size_t rk_in = (i + 1 <= c.top()) ? fraction_field_rank(c.boundaries[i + 1]) : 0;
    size_t rk_out = (i >= 1) ? fraction_field_rank(c.boundaries[i]) : 0;
    dims[i] = c.ranks[i] - rk_in - rk_out;
  }
  return dims;
}

// Finite domination of the restriction to k: every homology module must be
// k[t,t^-1]-torsion.  Decided degreewise through Smith normal form: a free
// basis of ker(d_i) is read off U(d_i); the rows of d_{i+1} are rewritten in
// that basis through U^-1, and torsion holds iff the resulting presentation
// matrix has no zero invariant factors and covers every column.
template <typename F>
bool finite_domination_check(const LaurentComplex<F>& c) {
  c.validate();
  for (size_t i = 0; i < c.ranks.size(); ++i) {
    size_t n = c.ranks[i];
    if (n == 0) continue;
    std::optional<SNFResult<F>> s_i;
    size_t rank_bi = 0;
    if (i >= 1) {
      s_i = snf(c.boundaries[i]);
      rank_bi = s_i->diag.size();
    }
    size_t ker_dim = n - rank_bi;
    if (ker_dim == 0) continue;  // nothing to kill
    if (i + 1 > c.top()) return false;  // free kernel survives

    // coefficients of the rows of d_{i+1} over the rows of U(d_i); only the
    // kernel columns can be nonzero because d d = 0.
    LaurentMatrix<F> coeff;
    if (i >= 1)
      coeff = laurent_mat_mul(c.boundaries[i + 1], s_i->u_inv);
    else
      coeff = c.boundaries[i + 1];
    LaurentMatrix<F> x(c.ranks[i + 1], std::vector<LaurentPoly<F>>(ker_dim));
    for (size_t r = 0; r < c.ranks[i + 1]; ++r)
      for (size_t j = 0; j < ker_dim; ++j) x[r][j] = coeff[r][rank_bi + j];
    if (x.empty()) return false;
    SNFResult<F> sx = snf(x);
    bool torsion = sx.diag.size() == ker_dim;
    for (const auto& d : sx.diag) torsion &= !d.is_zero();
    if (!torsion) return false;
  }
  return true;
}

struct RanickiRecord {
  bool finitely_dominated = false;
  bool novikov_acyclic = false;
  bool agree = false;
};

// Both sides of the finite-domination criterion, computed independently;
// disagreement means an implementation bug, never mathematics.
template <typename F>
RanickiRecord ranicki_verify(const LaurentComplex<F>& c) {
  RanickiRecord r;
  r.finitely_dominated = finite_domination_check(c);
  auto dims = homology_dims_fraction_field(c);
  r.novikov_acyclic = true;
  for (size_t d : dims) r.novikov_acyclic &= (d == 0);
  r.agree = (r.finitely_dominated == r.novikov_acyclic);
  return r;
}

}  // namespace sigmastar
