// The certified vanishing prover.  A Vanishes verdict on degrees [lo, hi]
// is backed by finite group-ring matrices sigma_i whose residuals
//     M_i = Id - B_i sigma_{i-1} - sigma_i B_{i+1}        (sigma_{lo-1} = 0)
// all have strictly chi-positive support.  Then M_i B_i = B_i M_{i-1}, so
// s_i = (Id - M_i)^-1 sigma_i satisfies Id = B_i s_{i-1} + s_i B_{i+1}
// exactly over the Novikov ring, with the Neumann inverses converging by
// positivity.  The residual supports are finite, so the same data stays
// valid on an open rational cone of characters.
#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sigmastar/complexes.hpp"
#include "sigmastar/cones.hpp"
#include "sigmastar/novikov.hpp"

namespace sigmastar {

enum class VerdictKind { Vanishes, NonVanishingCertified, Inconclusive };

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Vanishes: return "Vanishes";
    case VerdictKind::NonVanishingCertified: return "NonVanishingCertified";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

template <typename F>
struct ContractionLevel {
  size_t degree = 0;
  GroupRingMatrix<F> sigma_bar;  // finite correction at this degree
  GroupRingMatrix<F> residual;   // M = Id - B sigma_prev - sigma B_next
};

template <typename F>
struct ConeCertificate {
  size_t lo = 0, hi = 0;
  Character chi;  // character the contraction was run at
  bool structural = false;
  std::vector<ContractionLevel<F>> levels;
  SupportCone cone;
  Rational height_used = 0;
  std::vector<std::string> side_conditions;  // pivots consumed, rules used
};

template <typename F>
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<ConeCertificate<F>> certificate;
  SupportCone cone;    // in the query character's space
  std::string detail;  // rule used / blocking obstruction
  Rational max_height_tried = 0;

  bool vanishes() const { return kind == VerdictKind::Vanishes; }
};

struct EngineOptions {
  std::vector<long> schedule = {4, 8, 16, 32, 64};  // multiples of base height
};

namespace engine_detail {

// Minimal positive |chi(generator)|; the unit of the height schedule.
inline Rational base_height(const GroupContext& ctx, const Character& chi) {
  Rational best = 0;
  for (size_t g = 0; g < ctx.ab.ngens; ++g) {
    Rational h = chi.pair(ctx.ab.proj_free[g]);
    if (h < 0) h = -h;
    if (h != 0 && (best == 0 || h < best)) best = h;
  }
  return best;
}

template <typename F>
GroupRingMatrix<F> gr_of_nv(const NovikovMatrix<F>& m) {
  GroupRingMatrix<F> out(m.rows, m.cols);
  for (size_t i = 0; i < m.entries.size(); ++i)
    for (const auto& [key, c] : m.entries[i].terms)
      out.entries[i].add_term(key.second, c);
  return out;
}

// Every stored term of every entry strictly positive under chi.
template <typename F>
bool strictly_positive(const GroupContext& ctx, const Character& chi,
                       const GroupRingMatrix<F>& m, std::string* why) {
  for (const auto& e : m.entries)
    for (const auto& [w, c] : e.terms)
      if (ctx.height(chi, w) <= 0) {
        if (why)
          *why = "residual term " + ctx.pres.word_to_string(w) +
                 " at height " + to_string(ctx.height(chi, w));
        return false;
      }
  return true;
}

template <typename F>
void add_supports_to_cone(const GroupContext& ctx, const GroupRingMatrix<F>& m,
                          SupportCone& cone) {
  for (const auto& e : m.entries)
    for (const auto& [w, c] : e.terms) cone.add_strict(ctx.ab.project(w));
}

struct PivotRecord {
  size_t degree, row, col;
  Word word;
  Rational height;
};

// Left-solve X * B ~ A over the truncated Novikov ring: Gauss-Jordan on B
// with monomial-unit pivots tracked on E, then X = Y * E picks the pivot
// columns of A.  Best effort; soundness rests on the caller's residual
// check, not on anything done here.
template <typename F>
GroupRingMatrix<F> solve_left(const GroupContext& ctx, const Character& chi,
                              const GroupRingMatrix<F>& bmat,
                              const GroupRingMatrix<F>& amat,
                              const Rational& height, size_t degree,
                              std::vector<PivotRecord>* pivots,
                              SupportCone* cone) {
  size_t n = bmat.rows, m = bmat.cols, rows_a = amat.rows;
  GroupRingMatrix<F> x(rows_a, n);
  if (n == 0 || m == 0) return x;

  NovikovMatrix<F> b = nv_mat_from_gr(ctx, bmat, chi);
  NovikovMatrix<F> e = NovikovMatrix<F>::identity(n, chi);
  std::vector<int> pivot_of_col(m, -1);
  std::vector<char> row_used(n, 0);

  for (;;) {
    int bi = -1, bj = -1;
    for (size_t i = 0; i < n; ++i) {
      if (row_used[i]) continue;
      for (size_t j = 0; j < m; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        const auto& cand = b.at(i, j);
        if (!monomial_lowest(cand)) continue;
        if (bi >= 0) {
          const auto& best = b.at(bi, bj);
          Rational hc = cand.terms.begin()->first.first;
          Rational hb = best.terms.begin()->first.first;
          if (!(hc < hb ||
                (hc == hb && cand.terms.size() < best.terms.size())))
            continue;
        }
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
    if (bi < 0) break;

    NovikovElem<F> pivot = b.at(bi, bj);
    if (pivots)
      pivots->push_back({degree, static_cast<size_t>(bi),
                         static_cast<size_t>(bj),
                         pivot.terms.begin()->first.second,
                         pivot.terms.begin()->first.first});
    if (cone) {
      // Inequalities keeping this lowest term strictly dominant.
      auto v0 = ctx.ab.project(pivot.terms.begin()->first.second);
      for (auto it = std::next(pivot.terms.begin()); it != pivot.terms.end();
           ++it) {
        auto v = ctx.ab.project(it->first.second);
        for (size_t k = 0; k < v.size(); ++k) v[k] -= v0[k];
        cone->add_strict(v);
      }
    }

    NovikovElem<F> inv = nv_invert(ctx, pivot, height);
    row_used[bi] = 1;
    pivot_of_col[bj] = bi;
    for (size_t j = 0; j < m; ++j) b.at(bi, j) = nv_mul(ctx, inv, b.at(bi, j));
    for (size_t j = 0; j < n; ++j) e.at(bi, j) = nv_mul(ctx, inv, e.at(bi, j));
    for (size_t i = 0; i < n; ++i) {
      if (i == static_cast<size_t>(bi)) continue;
      NovikovElem<F> f = b.at(i, bj);
      if (f.terms.empty()) continue;
      for (size_t j = 0; j < m; ++j)
        b.at(i, j) = nv_sub(b.at(i, j), nv_mul(ctx, f, b.at(bi, j)));
      for (size_t j = 0; j < n; ++j)
        e.at(i, j) = nv_sub(e.at(i, j), nv_mul(ctx, f, e.at(bi, j)));
    }
  }

  NovikovMatrix<F> an = nv_mat_from_gr(ctx, amat, chi);
  NovikovMatrix<F> y(rows_a, n, chi);
  for (size_t c = 0; c < m; ++c) {
    int p = pivot_of_col[c];
    if (p < 0) continue;
    for (size_t r = 0; r < rows_a; ++r)
      y.at(r, p) = nv_add(y.at(r, p), an.at(r, c));
  }
  return gr_of_nv(nv_mat_mul(ctx, chi, y, e));
}

// Truncated s_i = (sum_k M^k) sigma_i below height t; M is finite and
// strictly positive, so the sum stabilizes and is trusted below the first
// omitted power.
template <typename F>
NovikovMatrix<F> truncated_contraction(const GroupContext& ctx,
                                       const Character& chi,
                                       const GroupRingMatrix<F>& residual,
                                       const GroupRingMatrix<F>& sigma_bar,
                                       const Rational& t) {
  size_t n = residual.rows;
  NovikovMatrix<F> m_hat = nv_mat_from_gr(ctx, residual, chi);
  NovikovMatrix<F> neumann = NovikovMatrix<F>::identity(n, chi);
  NovikovMatrix<F> pk = m_hat;
  ExtRational exit_bound = ExtRational::infinity();
  for (;;) {
    ExtRational bound = ExtRational::infinity();
    for (const auto& en : pk.entries)
      bound = ExtRational::min(bound, en.min_height_bound());
    if (!(bound < ExtRational::of(t))) {
      if (n > 0) exit_bound = bound;
      break;
    }
    for (size_t k = 0; k < neumann.entries.size(); ++k)
      neumann.entries[k] = nv_add(neumann.entries[k], pk.entries[k]);
    pk = nv_mat_mul(ctx, chi, pk, m_hat);
  }
  for (auto& en : neumann.entries)
    if (exit_bound < en.trunc && !exit_bound.is_infinite())
      en = nv_truncate(en, *exit_bound.value);
  return nv_mat_mul(ctx, chi, neumann, nv_mat_from_gr(ctx, sigma_bar, chi));
}

}  // namespace engine_detail

// Recomputes every residual from the stored finite data by independent
// multiplication and checks strict positivity, then rebuilds the truncated
// contraction maps and checks the level identities
// Id - B s_{i-1} - s_i B_{i+1} = 0 below their trusted heights.  Public
// because tests run it on every emitted certificate.
template <typename F>
bool verify_certificate(const GroupContext& ctx, const NovikovComplex<F>& nc,
                        const ConeCertificate<F>& cert,
                        std::string* why = nullptr) {
  auto bail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!cone_contains(ctx, cert.cone, cert.chi) &&
      !(cert.cone.strict.empty() && cert.cone.nonvanishing.empty()))
    return bail("certifying character escapes its own cone");
  if (cert.structural) return true;

  const Character& chi = cert.chi;
  Rational t = cert.height_used;
  GroupRingMatrix<F> sigma_prev;
  NovikovMatrix<F> s_prev;
  size_t idx = 0;

  for (size_t i = cert.lo; i <= cert.hi; ++i, ++idx) {
    if (idx >= cert.levels.size()) return bail("missing contraction level");
    const auto& lvl = cert.levels[idx];
    size_t rank_i = nc.ranks[i];

    GroupRingMatrix<F> b_i;
    if (i >= 1) b_i = engine_detail::gr_of_nv(nc.boundaries[i]);
    GroupRingMatrix<F> a0 = GroupRingMatrix<F>::identity(rank_i);
    if (i > cert.lo) a0 = mat_sub(a0, mat_mul(ctx, b_i, sigma_prev));
    GroupRingMatrix<F> bnext(0, rank_i);
    if (i + 1 <= nc.top()) bnext = engine_detail::gr_of_nv(nc.boundaries[i + 1]);

    GroupRingMatrix<F> m = mat_sub(a0, mat_mul(ctx, lvl.sigma_bar, bnext));
    std::string reason;
    if (!engine_detail::strictly_positive(ctx, chi, m, &reason))
      return bail("degree " + std::to_string(i) + ": " + reason);
    // Residual supports must lie in the stored cone's constraint set, which
    // cone membership of chi then witnesses on the whole cone.
    for (const auto& e : m.entries)
      for (const auto& [w, c] : e.terms) {
        auto v = primitive_vector(ctx.ab.project(w));
        bool found = false;
        for (const auto& u : cert.cone.strict) found |= (u == v);
        if (!found)
          return bail("degree " + std::to_string(i) +
                      ": residual support missing from the cone");
      }

    NovikovMatrix<F> s_i =
        engine_detail::truncated_contraction(ctx, chi, m, lvl.sigma_bar, t);

    // Id - B s_prev - s B_next = 0 below the trusted height.
    NovikovMatrix<F> resid = NovikovMatrix<F>::identity(rank_i, chi);
    if (i > cert.lo)
      resid = nv_mat_sub(
          resid, nv_mat_mul(ctx, chi, nv_mat_from_gr(ctx, b_i, chi), s_prev));
    if (bnext.rows > 0)
      resid = nv_mat_sub(
          resid, nv_mat_mul(ctx, chi, s_i, nv_mat_from_gr(ctx, bnext, chi)));
    if (rank_i > 0 && (i > cert.lo || bnext.rows > 0)) {
      ExtRational trusted = resid.trusted_height();
      if (!(ExtRational::of(Rational(0)) < trusted))
        return bail("degree " + std::to_string(i) +
                    ": identity residual has no trusted positive range");
      for (const auto& en : resid.entries)
        if (!en.terms.empty())
          return bail("degree " + std::to_string(i) +
                      ": id - s d - d s != 0 below trusted height");
    }

    sigma_prev = lvl.sigma_bar;
    s_prev = s_i;
  }
  return true;
}

// Partial chain contraction over the truncated Novikov ring on degrees
// [lo, hi], starting from sigma_{lo-1} = 0.  Success certifies vanishing of
// H_i(C (x) Novikov) for lo <= i <= hi on an open cone around chi.
template <typename F>
Verdict<F> attempt_contraction(const GroupContext& ctx,
                               const NovikovComplex<F>& nc, size_t lo,
                               size_t hi, const EngineOptions& opts = {}) {
  Verdict<F> out;
  if (hi > nc.top() || lo > hi)
    fail(errc::degree_out_of_range,
         "degrees [" + std::to_string(lo) + "," + std::to_string(hi) +
             "] in a complex of length " + std::to_string(nc.top()));
  const Character& chi = nc.chi;
  size_t ambient = ctx.ab.free_rank;

  bool all_zero = true;
  for (size_t i = lo; i <= hi && all_zero; ++i) all_zero = (nc.ranks[i] == 0);
  if (all_zero) {
    ConeCertificate<F> cert;
    cert.lo = lo;
    cert.hi = hi;
    cert.chi = chi;
    cert.structural = true;
    cert.cone.ambient_rank = ambient;
    cert.side_conditions.push_back("zero complex in the requested degrees");
    out.kind = VerdictKind::Vanishes;
    out.cone = cert.cone;
    out.certificate = std::move(cert);
    out.detail = "structurally zero complex";
    return out;
  }

  // Sound non-vanishing rule: both adjacent boundaries are zero maps on a
  // nonzero module, so H_i is a nonzero free Novikov module.
  for (size_t i = lo; i <= hi; ++i) {
    if (nc.ranks[i] == 0) continue;
    bool b_lo_zero = true, b_hi_zero = true;
    if (i >= 1 && i <= nc.top())
      for (const auto& en : nc.boundaries[i].entries)
        b_lo_zero &= en.terms.empty();
    if (i + 1 <= nc.top())
      for (const auto& en : nc.boundaries[i + 1].entries)
        b_hi_zero &= en.terms.empty();
    if (b_lo_zero && b_hi_zero) {
      out.kind = VerdictKind::NonVanishingCertified;
      out.detail = "zero boundary maps on a free module of rank " +
                   std::to_string(nc.ranks[i]) + " in degree " +
                   std::to_string(i);
      return out;
    }
  }

  Rational base = engine_detail::base_height(ctx, chi);
  if (base == 0) fail(errc::zero_character, "attempt_contraction");
  std::string obstruction = "no attempt made";

  for (long mult : opts.schedule) {
    Rational height = base * mult;
    out.max_height_tried = height;

    ConeCertificate<F> cert;
    cert.lo = lo;
    cert.hi = hi;
    cert.chi = chi;
    cert.height_used = height;
    cert.cone.ambient_rank = ambient;
    std::vector<engine_detail::PivotRecord> pivots;

    GroupRingMatrix<F> sigma_prev;  // sigma_{lo-1} = 0
    bool ok = true;

    for (size_t i = lo; i <= hi && ok; ++i) {
      size_t rank_i = nc.ranks[i];
      GroupRingMatrix<F> b_i;
      if (i >= 1) b_i = engine_detail::gr_of_nv(nc.boundaries[i]);
      GroupRingMatrix<F> a0 = GroupRingMatrix<F>::identity(rank_i);
      if (i > lo) a0 = mat_sub(a0, mat_mul(ctx, b_i, sigma_prev));
      GroupRingMatrix<F> bnext(0, rank_i);
      if (i + 1 <= nc.top())
        bnext = engine_detail::gr_of_nv(nc.boundaries[i + 1]);

      GroupRingMatrix<F> sigma = engine_detail::solve_left(
          ctx, chi, bnext, a0, height, i, &pivots, &cert.cone);
      GroupRingMatrix<F> m = mat_sub(a0, mat_mul(ctx, sigma, bnext));
      std::string why;
      if (!engine_detail::strictly_positive(ctx, chi, m, &why)) {
        ok = false;
        obstruction = "degree " + std::to_string(i) + ": " + why;
        break;
      }
      engine_detail::add_supports_to_cone(ctx, m, cert.cone);

      ContractionLevel<F> lvl;
      lvl.degree = i;
      lvl.sigma_bar = sigma;
      lvl.residual = m;
      cert.levels.push_back(std::move(lvl));
      sigma_prev = sigma;
    }

    if (!ok) continue;

    cert.cone.canonicalize();
    for (const auto& pv : pivots) {
      std::ostringstream os;
      os << "degree " << pv.degree << " pivot (" << pv.row << "," << pv.col
         << ") = " << ctx.pres.word_to_string(pv.word) << " @ "
         << to_string(pv.height);
      cert.side_conditions.push_back(os.str());
    }

    std::string vwhy;
    if (!verify_certificate(ctx, nc, cert, &vwhy)) {
      obstruction = "certificate failed re-verification: " + vwhy;
      continue;
    }

    out.kind = VerdictKind::Vanishes;
    out.certificate = std::move(cert);
    out.cone = out.certificate->cone;
    out.detail = "partial chain contraction of length " +
                 std::to_string(hi - lo + 1);
    return out;
  }

  out.kind = VerdictKind::Inconclusive;
  out.detail = obstruction;
  return out;
}

}  // namespace sigmastar
