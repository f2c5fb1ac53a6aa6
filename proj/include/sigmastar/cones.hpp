// Open rational polyhedral cones in character space, and exact
// Fourier-Motzkin machinery for deciding sphere coverage by such cones.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "sigmastar/character.hpp"
#include "sigmastar/groupring.hpp"
#include "sigmastar/rational.hpp"

namespace sigmastar {

// {psi != 0 : <psi, v> > 0 for all strict v; sign_g * psi(gen_g) > 0}.
// Empty constraint lists give the whole character space minus 0.
struct SupportCone {
  size_t ambient_rank = 0;
  std::vector<std::vector<Integer>> strict;        // primitive, deduplicated
  std::vector<std::pair<size_t, int>> nonvanishing;  // (generator, sign)

  void add_strict(std::vector<Integer> v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero |= (x != 0);
    if (!nonzero) return;
    strict.push_back(primitive_vector(std::move(v)));
  }

  void canonicalize() {
    std::sort(strict.begin(), strict.end());
    strict.erase(std::unique(strict.begin(), strict.end()), strict.end());
    std::sort(nonvanishing.begin(), nonvanishing.end());
    nonvanishing.erase(
        std::unique(nonvanishing.begin(), nonvanishing.end()),
        nonvanishing.end());
  }
};

inline bool cone_contains(const GroupContext& ctx, const SupportCone& c,
                          const Character& psi) {
  if (psi.coords.size() != c.ambient_rank)
    fail(errc::dimension_mismatch, "cone_contains");
  if (psi.is_zero()) return false;
  for (const auto& v : c.strict)
    if (psi.pair(v) <= 0) return false;
  for (const auto& [g, sign] : c.nonvanishing) {
    Rational val = psi.pair(ctx.ab.proj_free[g]);
    if (sign > 0 ? val <= 0 : val >= 0) return false;
  }
  return true;
}

// Cone on which every support vector of every element keeps the strict sign
// it has at chi (zero heights impose nothing; strictness cannot hold there).
template <typename F>
SupportCone support_cone(const GroupContext& ctx,
                         const std::vector<GroupRingElem<F>>& elems,
                         const Character& chi) {
  SupportCone c;
  c.ambient_rank = ctx.ab.free_rank;
  for (const auto& e : elems)
    for (const auto& v : support_vectors(ctx, e)) {
      Rational h = chi.pair(v);
      if (h > 0) {
        c.add_strict(v);
      } else if (h < 0) {
        auto neg = v;
        for (auto& x : neg) x = -x;
        c.add_strict(neg);
      }
    }
  c.canonicalize();
  return c;
}

// ---- Fourier-Motzkin over Q: nonzero solutions of A x <= 0 ----

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

namespace detail {

// Feasibility of { rows r: <r_{0..n-1}, x> <= r_n } by eliminating variables
// right to left; returns a witness when feasible.
inline bool fm_feasible(QMatrix rows, size_t nvars, QVector* witness) {
  std::vector<QMatrix> stages;
  for (size_t v = nvars; v-- > 0;) {
    stages.push_back(rows);
    QMatrix next;
    QMatrix pos, neg;
    for (auto& r : rows) {
      if (r[v] > 0)
        pos.push_back(r);
      else if (r[v] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    // x_v <= (b - rest)/p for pos rows, >= for neg rows; cross-combine.
    for (const auto& rp : pos)
      for (const auto& rn : neg) {
        QVector comb(nvars + 1, Rational(0));
        for (size_t j = 0; j <= nvars; ++j)
          comb[j] = rp[j] * -rn[v] + rn[j] * rp[v];
        // coefficient of x_v is zero by construction; orient: -rn[v] > 0
        comb[v] = 0;
        next.push_back(comb);
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r[nvars] < 0) return false;  // 0 <= negative constant
  if (!witness) return true;

  witness->assign(nvars, Rational(0));
  // Back-substitute: stages[k] is the system before eliminating variable
  // nvars-1-k, so it bounds that variable in terms of later-assigned ones.
  for (size_t k = stages.size(); k-- > 0;) {
    size_t v = nvars - 1 - k;
    const QMatrix& stage = stages[k];
    bool have_lo = false, have_hi = false;
    Rational lo(0), hi(0);
    for (const auto& r : stage) {
      if (r[v] == 0) continue;
      Rational rest = r[nvars];
      for (size_t j = 0; j < nvars; ++j)
        if (j != v) rest -= r[j] * (*witness)[j];
      Rational bound = rest / r[v];
      if (r[v] > 0) {  // x_v <= bound
        if (!have_hi || bound < hi) hi = bound, have_hi = true;
      } else {  // x_v >= bound
        if (!have_lo || bound > lo) lo = bound, have_lo = true;
      }
    }
    Rational val(0);
    if (have_lo && have_hi)
      val = (lo + hi) / 2;
    else if (have_lo)
      val = lo;
    else if (have_hi)
      val = hi;
    (*witness)[v] = val;
  }
  return true;
}

}  // namespace detail

// Is there x != 0 with <x, v> <= 0 for all v in `weak`?  The cone is scale
// invariant, so x != 0 iff some coordinate can be pinned to +-1.
inline bool nonzero_solution(const std::vector<QVector>& weak, size_t nvars,
                             QVector* witness) {
  for (size_t j = 0; j < nvars; ++j)
    for (int sign : {+1, -1}) {
      QMatrix rows;
      for (const auto& v : weak) {
        QVector r(nvars + 1, Rational(0));
        for (size_t i = 0; i < nvars; ++i) r[i] = v[i];
        rows.push_back(std::move(r));
      }
      // pin x_j = sign: two inequalities
      QVector eq1(nvars + 1, Rational(0)), eq2(nvars + 1, Rational(0));
      eq1[j] = 1;
      eq1[nvars] = sign;
      eq2[j] = -1;
      eq2[nvars] = -sign;
      rows.push_back(eq1);
      rows.push_back(eq2);
      if (detail::fm_feasible(std::move(rows), nvars, witness)) return true;
    }
  return false;
}

// Decides whether open cones (given by strict normal lists in a d-space)
// jointly cover Q^d minus 0.  If not, produces an uncovered direction,
// scaled to a primitive integer vector.
inline bool cones_cover_sphere(const std::vector<std::vector<QVector>>& cones,
                               size_t d, std::vector<Integer>* uncovered) {
  // A point escapes every cone iff for each cone some normal pairs <= 0:
  // branch over the choice of violated normal per cone.
  std::vector<QVector> system;
  std::function<bool(size_t)> search = [&](size_t k) -> bool {
    if (!nonzero_solution(system, d, nullptr)) return false;
    if (k == cones.size()) {
      if (uncovered) {
        QVector w;
        nonzero_solution(system, d, &w);
        Integer den = 1;
        for (const auto& q : w)
          den = den / gcd(den, denominator(q)) * denominator(q);
        std::vector<Integer> iv;
        for (const auto& q : w) iv.push_back(numerator(q * Rational(den)));
        *uncovered = primitive_vector(iv);
      }
      return true;  // found an uncovered direction
    }
    if (cones[k].empty()) return false;  // unconstrained cone covers all
    for (const auto& v : cones[k]) {
      system.push_back(v);
      if (search(k + 1)) return true;
      system.pop_back();
    }
    return false;
  };
  return !search(0);
}

}  // namespace sigmastar
