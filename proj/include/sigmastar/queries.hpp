// Vanishing queries expressed through the contraction engine: homology,
// cohomology (via the involuted dual at the negated character), Sigma and
// Sigma*-membership, cohomological-dimension drop, and the one-relator
// second-homology rule.
#pragma once

#include "sigmastar/engine.hpp"

namespace sigmastar {

template <typename F>
Verdict<F> check_homology_vanishing(const GroupContext& ctx,
                                    const ChainComplex<F>& c,
                                    const Character& chi, size_t lo, size_t hi,
                                    const EngineOptions& opts = {}) {
  if (chi.is_zero()) fail(errc::zero_character, "homology vanishing");
  NovikovComplex<F> nc = tensor_novikov(ctx, c, chi);
  return attempt_contraction(ctx, nc, lo, hi, opts);
}

inline SupportCone negate_cone(SupportCone c) {
  for (auto& v : c.strict)
    for (auto& x : v) x = -x;
  for (auto& [g, s] : c.nonvanishing) s = -s;
  c.canonicalize();
  return c;
}

// H^i(C; Nov^chi) for ilo <= i <= ihi equals homology of the involuted
// dual at -chi in the mirrored degrees.  The verdict's cone is mapped back
// to the query character's side.
template <typename F>
Verdict<F> check_cohomology_vanishing(const GroupContext& ctx,
                                      const ChainComplex<F>& c,
                                      const Character& chi, size_t ilo,
                                      size_t ihi,
                                      const EngineOptions& opts = {}) {
  if (chi.is_zero()) fail(errc::zero_character, "cohomology vanishing");
  size_t L = c.top();
  if (ihi > L || ilo > ihi)
    fail(errc::degree_out_of_range, "cohomology degrees");
  ChainComplex<F> d = dualize(ctx, c);
  NovikovComplex<F> nc = tensor_novikov(ctx, d, chi.negated());
  Verdict<F> v = attempt_contraction(ctx, nc, L - ihi, L - ilo, opts);
  v.cone = negate_cone(v.cone);
  return v;
}

// Sikorav's criterion: chi lies in Sigma(G) iff H_1 with Novikov
// coefficients vanishes; degree 0 rides along in the contraction.
template <typename F>
Verdict<F> sigma_membership(const GroupContext& ctx, const ChainComplex<F>& c,
                            const Character& chi,
                            const EngineOptions& opts = {}) {
  return check_homology_vanishing(ctx, c, chi, 0, std::min<size_t>(1, c.top()),
                                  opts);
}

// Sigma*_m over the asserted cohomological dimension n: vanishing of
// H^i(C; Nov^chi) for n-m < i <= n.  Degrees above the complex length are
// structurally zero when the complex is a genuine resolution.
template <typename F>
Verdict<F> sigma_star_membership(const GroupContext& ctx,
                                 const ChainComplex<F>& c,
                                 const Character& chi, size_t n, size_t m,
                                 const EngineOptions& opts = {}) {
  if (m < 1) fail(errc::degree_out_of_range, "m must be at least 1");
  if (n > c.top() && !c.exactness_known)
    fail(errc::degree_out_of_range,
         "asserted cd " + std::to_string(n) + " exceeds complex length " +
             std::to_string(c.top()));
  size_t ilo = (m > n) ? 0 : n - m + 1;
  if (ilo > c.top()) {
    // the whole requested range lies above a known resolution
    Verdict<F> v;
    v.kind = VerdictKind::Vanishes;
    ConeCertificate<F> cert;
    cert.lo = ilo;
    cert.hi = n;
    cert.chi = chi;
    cert.structural = true;
    cert.cone.ambient_rank = ctx.ab.free_rank;
    cert.side_conditions.push_back("degrees above the resolution length");
    v.cone = cert.cone;
    v.certificate = std::move(cert);
    v.detail = "resolution is zero in the requested degrees";
    return v;
  }
  return check_cohomology_vanishing(ctx, c, chi, ilo, std::min(n, c.top()),
                                    opts);
}

// Torsion-free one-relator groups have vanishing H_2 with any Novikov
// coefficients: the top boundary of the length-2 free resolution stays
// injective over any ring without zero divisors that contains k[G].
template <typename F>
Verdict<F> one_relator_h2_rule(const GroupContext& ctx, const Character& chi) {
  if (ctx.pres.relators.size() != 1)
    fail(errc::not_one_relator,
         std::to_string(ctx.pres.relators.size()) + " relators");
  if (is_proper_power(ctx.pres.relators[0]))
    fail(errc::proper_power_relator, "relator is a proper power");
  if (chi.is_zero()) fail(errc::zero_character, "one_relator_h2_rule");
  Verdict<F> v;
  v.kind = VerdictKind::Vanishes;
  ConeCertificate<F> cert;
  cert.lo = cert.hi = 2;
  cert.chi = chi;
  cert.structural = true;
  cert.cone.ambient_rank = ctx.ab.free_rank;
  cert.side_conditions.push_back(
      "one-relator rule: injective top boundary over a domain");
  v.cone = cert.cone;
  v.certificate = std::move(cert);
  v.detail = "one-relator H2 rule (torsion-free relator)";
  return v;
}

}  // namespace sigmastar
