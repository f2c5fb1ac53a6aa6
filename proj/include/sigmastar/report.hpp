// Report assembly and the stable JSON schema:
// {group, field, complex{kind, exactnessKnown}, cdAssertion,
//  queries[{character, sign, degrees, verdict, heightUsed, cone{strict}}],
//  conclusion}.
#pragma once

#include <json.hpp>

#include "sigmastar/coabelian.hpp"
#include "sigmastar/laurent.hpp"
#include "sigmastar/queries.hpp"

namespace sigmastar {

using Json = nlohmann::ordered_json;

struct QueryRecord {
  std::vector<Rational> character;
  std::string sign;  // "+" or "-"
  size_t deg_lo = 0, deg_hi = 0;
  std::string degree_kind;  // "homology" or "cohomology"
  std::string verdict;
  Rational height_used = 0;
  SupportCone cone;
  std::string detail;
};

struct Report {
  std::string group;
  std::string field;
  std::string complex_kind;
  bool exactness_known = false;
  std::optional<size_t> cd_assertion;
  std::vector<QueryRecord> queries;
  std::string conclusion;
  std::vector<std::vector<Integer>> intersection_cone;  // both-sign validity
  std::optional<std::vector<Integer>> uncovered;
  std::vector<std::string> notes;
};

inline Json json_of_cone(const SupportCone& c) {
  Json strict = Json::array();
  for (const auto& v : c.strict) {
    Json vec = Json::array();
    for (const auto& x : v) vec.push_back(std::stoll(x.str()));
    strict.push_back(vec);
  }
  return Json{{"strict", strict}};
}

inline Json json_of_report(const Report& r) {
  Json j;
  j["group"] = r.group;
  j["field"] = r.field;
  j["complex"] = Json{{"kind", r.complex_kind},
                      {"exactnessKnown", r.exactness_known}};
  if (r.cd_assertion)
    j["cdAssertion"] = *r.cd_assertion;
  else
    j["cdAssertion"] = nullptr;
  Json qs = Json::array();
  for (const auto& q : r.queries) {
    Json jq;
    Json ch = Json::array();
    for (const auto& c : q.character) ch.push_back(to_string(c));
    jq["character"] = ch;
    jq["sign"] = q.sign;
    jq["degrees"] = Json::array({q.deg_lo, q.deg_hi});
    jq["degreeKind"] = q.degree_kind;
    jq["verdict"] = q.verdict;
    jq["heightUsed"] = to_string(q.height_used);
    jq["cone"] = json_of_cone(q.cone);
    jq["detail"] = q.detail;
    qs.push_back(jq);
  }
  j["queries"] = qs;
  j["conclusion"] = r.conclusion;
  if (!r.intersection_cone.empty()) {
    Json ic = Json::array();
    for (const auto& v : r.intersection_cone) {
      Json vec = Json::array();
      for (const auto& x : v) vec.push_back(std::stoll(x.str()));
      ic.push_back(vec);
    }
    j["intersectionCone"] = ic;
  }
  if (r.uncovered) {
    Json u = Json::array();
    for (const auto& x : *r.uncovered) u.push_back(std::stoll(x.str()));
    j["uncovered"] = u;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

template <typename F>
QueryRecord query_record(const Character& chi, const std::string& sign,
                         size_t lo, size_t hi, const std::string& kind,
                         const Verdict<F>& v) {
  QueryRecord q;
  q.character = chi.coords;
  q.sign = sign;
  q.deg_lo = lo;
  q.deg_hi = hi;
  q.degree_kind = kind;
  q.verdict = verdict_name(v.kind);
  q.height_used =
      v.certificate ? v.certificate->height_used : v.max_height_tried;
  q.cone = v.cone;
  q.detail = v.detail;
  return q;
}

template <typename F>
Report base_report(const GroupContext& ctx, const ChainComplex<F>& c) {
  Report r;
  r.group = ctx.pres.name;
  r.field = field_traits<F>::name();
  r.complex_kind = c.kind;
  r.exactness_known = c.exactness_known;
  if (!c.exactness_known)
    r.notes.push_back(
        "verdicts concern the presentation complex; without a known "
        "resolution they bound group (co)homology from the complex side");
  return r;
}

// Sigma-membership report (Sikorav criterion, degrees 0..1 homology).
template <typename F>
Report sigma_report(const GroupContext& ctx, const ChainComplex<F>& c,
                    const Character& chi, const EngineOptions& opts = {}) {
  Report r = base_report(ctx, c);
  Verdict<F> v = sigma_membership(ctx, c, chi, opts);
  r.queries.push_back(query_record(chi, "+", 0, std::min<size_t>(1, c.top()),
                                   "homology", v));
  r.conclusion = v.vanishes()
                     ? "chi lies in Sigma(G) over " + r.field +
                           " (kernel-side finiteness per the BNS criterion)"
                     : (v.kind == VerdictKind::NonVanishingCertified
                            ? "chi does not lie in Sigma(G)"
                            : "membership not decided");
  return r;
}

// Sigma*_m report at the asserted cohomological dimension n, one sign.
template <typename F>
Report sigma_star_report(const GroupContext& ctx, const ChainComplex<F>& c,
                         const Character& chi, size_t n, size_t m,
                         const EngineOptions& opts = {}) {
  Report r = base_report(ctx, c);
  r.cd_assertion = n;
  Verdict<F> v = sigma_star_membership(ctx, c, chi, n, m, opts);
  size_t ilo = (m > n) ? 0 : n - m + 1;
  r.queries.push_back(query_record(chi, "+", ilo, n, "cohomology", v));
  r.conclusion = v.vanishes() ? "chi lies in Sigma*_" + std::to_string(m) +
                                    " for the asserted cd"
                              : "membership not decided";
  return r;
}

// cd-drop report: both signs of a primitive integral character in the top
// cohomological degree.
template <typename F>
Report cd_drop_report(const GroupContext& ctx, const ChainComplex<F>& c,
                      const Character& chi_in, size_t n,
                      const EngineOptions& opts = {}) {
  if (chi_in.is_zero())
    fail(errc::non_integral_character, "zero character");
  Character chi = primitive_integral(ctx.ab, chi_in);
  Report r = base_report(ctx, c);
  r.cd_assertion = n;
  Verdict<F> plus = sigma_star_membership(ctx, c, chi, n, 1, opts);
  Verdict<F> minus = sigma_star_membership(ctx, c, chi.negated(), n, 1, opts);
  r.queries.push_back(query_record(chi, "+", n, n, "cohomology", plus));
  r.queries.push_back(
      query_record(chi.negated(), "-", n, n, "cohomology", minus));
  if (plus.vanishes() && minus.vanishes()) {
    r.conclusion = "cd(ker chi) = " + std::to_string(n - 1);
    if (n == 2 && c.exactness_known)
      r.conclusion += "; kernel free (cd 1 via Stallings-Swan)";
    // Cone valid for both signs: the minus-side cone reflected to chi.
    std::set<std::vector<Integer>> both;
    for (const auto& v : plus.cone.strict) both.insert(v);
    for (auto v : minus.cone.strict) {
      for (auto& x : v) x = -x;
      both.insert(primitive_vector(v));
    }
    r.intersection_cone.assign(both.begin(), both.end());
  } else {
    r.conclusion =
        "Unknown: at least one sign is not certified; no cd-drop claim";
  }
  return r;
}

// Co-Abelian sphere report.
template <typename F>
Report coabelian_report(const GroupContext& ctx, const ChainComplex<F>& c,
                        const QuotientMap& q, size_t n, size_t budget,
                        const EngineOptions& opts = {}) {
  Report r = base_report(ctx, c);
  r.cd_assertion = n;
  CoabelianResult<F> res = cover_sphere(ctx, c, q, n, budget, opts);
  for (const auto& s : res.samples) {
    std::string sign = "+";  // each direction is its own sphere point
    size_t ilo = (q.d > n) ? 0 : n - q.d + 1;
    r.queries.push_back(
        query_record(s.chi, sign, ilo, n, "cohomology", s.verdict));
  }
  r.conclusion = res.conclusion;
  r.uncovered = res.uncovered;
  PolyZSeries series = polyz_series(q);
  std::string flag = "poly-Z flag characters:";
  for (const auto& lvl : series.characters) {
    flag += " (";
    for (size_t j = 0; j < lvl.size(); ++j)
      flag += (j ? "," : "") + lvl[j].str();
    flag += ")";
  }
  r.notes.push_back(flag);
  return r;
}

// ---- oracle complex file format ----
// JSON array of matrices (degree 1 up); entry = list of [exp, num, den].

template <typename F>
LaurentComplex<F> laurent_complex_from_json(const Json& j) {
  LaurentComplex<F> c;
  if (!j.is_array()) fail(errc::not_a_complex, "expected an array of matrices");
  std::vector<LaurentMatrix<F>> mats;
  for (const auto& jm : j) {
    LaurentMatrix<F> m;
    for (const auto& jrow : jm) {
      std::vector<LaurentPoly<F>> row;
      for (const auto& je : jrow) {
        LaurentPoly<F> p;
        for (const auto& jt : je) {
          long e = jt.at(0).get<long>();
          long num = jt.at(1).get<long>();
          long den = jt.at(2).get<long>();
          if (den == 0) fail(errc::not_a_complex, "zero denominator");
          p.add_term(e, field_traits<F>::from_int(num) /
                            field_traits<F>::from_int(den));
        }
        row.push_back(std::move(p));
      }
      m.push_back(std::move(row));
    }
    mats.push_back(std::move(m));
  }
  if (mats.empty()) fail(errc::not_a_complex, "no matrices");
  c.ranks.push_back(mats[0].empty() ? 0 : mats[0][0].size());
  for (const auto& m : mats) c.ranks.push_back(m.size());
  c.boundaries.resize(1);
  for (auto& m : mats) c.boundaries.push_back(std::move(m));
  c.validate();
  return c;
}

// Bridge into the engine: the same complex over the group ring of Z.
template <typename F>
ChainComplex<F> laurent_to_group_complex(const GroupContext& zctx,
                                         const LaurentComplex<F>& c) {
  ChainComplex<F> out;
  out.kind = "laurent";
  out.ranks = c.ranks;
  out.boundaries.resize(c.boundaries.size());
  for (size_t i = 1; i < c.boundaries.size(); ++i) {
    const auto& m = c.boundaries[i];
    GroupRingMatrix<F> gm(c.ranks[i], c.ranks[i - 1]);
    for (size_t r = 0; r < m.size(); ++r)
      for (size_t col = 0; col < m[r].size(); ++col)
        for (const auto& [e, coeff] : m[r][col].coeffs) {
          Word w;
          Letter t = make_letter(0, e < 0);
          for (long k = 0; k < std::labs(e); ++k) w.push_back(t);
          gm.at(r, col).add_term(w, coeff);
        }
    out.boundaries[i] = std::move(gm);
  }
  out.validate(zctx);
  return out;
}

}  // namespace sigmastar
