// Truncated elements of the Novikov ring of (G, chi): finitely many terms
// of height < T plus the truncation height T.  Every stored term below T is
// exact; nothing is claimed at or above T.
#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "sigmastar/groupring.hpp"

namespace sigmastar {

template <typename F>
struct NovikovElem {
  Character chi;
  std::map<std::pair<Rational, Word>, F> terms;  // (height, nf word) -> coeff
  ExtRational trunc = ExtRational::infinity();

  bool known_zero() const { return terms.empty() && trunc.is_infinite(); }

  // Lower bound for the heights of the element this value represents.
  ExtRational min_height_bound() const {
    if (!terms.empty()) return ExtRational::of(terms.begin()->first.first);
    return trunc;  // everything below T is zero
  }

  void add_term(const Rational& h, const Word& w, const F& c) {
    if (field_traits<F>::is_zero(c)) return;
    if (!(ExtRational::of(h) < trunc)) return;  // at/above T: unknown
    auto key = std::make_pair(h, w);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (field_traits<F>::is_zero(it->second)) terms.erase(it);
    }
  }
};

template <typename F>
NovikovElem<F> nv_zero(Character chi) {
  return NovikovElem<F>{std::move(chi), {}, ExtRational::infinity()};
}

template <typename F>
NovikovElem<F> nv_from_gr(const GroupContext& ctx, const GroupRingElem<F>& a,
                          Character chi) {
  NovikovElem<F> e = nv_zero<F>(std::move(chi));
  for (const auto& [w, c] : a.terms)
    e.add_term(ctx.height(e.chi, w), w, c);
  return e;
}

template <typename F>
NovikovElem<F> nv_one(Character chi) {
  NovikovElem<F> e = nv_zero<F>(std::move(chi));
  e.add_term(Rational(0), Word{}, field_traits<F>::one());
  return e;
}

// Keeps exactly the terms of height < t.
template <typename F>
NovikovElem<F> nv_truncate(const NovikovElem<F>& e, const Rational& t) {
  if (e.trunc < ExtRational::of(t))
    fail(errc::truncation_above_knowledge,
         "truncating at " + to_string(t) + " above known height " +
             to_string(e.trunc));
  NovikovElem<F> out;
  out.chi = e.chi;
  out.trunc = ExtRational::of(t);
  for (const auto& [key, c] : e.terms) {
    if (key.first >= t) break;
    out.terms.emplace(key, c);
  }
  return out;
}

template <typename F>
NovikovElem<F> nv_add(const NovikovElem<F>& a, const NovikovElem<F>& b) {
  if (!(a.chi == b.chi)) fail(errc::character_mismatch, "nv_add");
  NovikovElem<F> out;
  out.chi = a.chi;
  out.trunc = ExtRational::min(a.trunc, b.trunc);
  for (const auto& [key, c] : a.terms) out.add_term(key.first, key.second, c);
  for (const auto& [key, c] : b.terms) out.add_term(key.first, key.second, c);
  return out;
}

template <typename F>
NovikovElem<F> nv_neg(const NovikovElem<F>& a) {
  NovikovElem<F> out = a;
  for (auto& [key, c] : out.terms) c = -c;
  return out;
}

template <typename F>
NovikovElem<F> nv_sub(const NovikovElem<F>& a, const NovikovElem<F>& b) {
  return nv_add(a, nv_neg(b));
}

// T_prod = min(T_a + minheight(b), T_b + minheight(a)); products with exact
// zero are exact zero.  Heights add along products, so term heights come
// free of charge.
template <typename F>
NovikovElem<F> nv_mul(const GroupContext& ctx, const NovikovElem<F>& a,
                      const NovikovElem<F>& b) {
  if (!(a.chi == b.chi)) fail(errc::character_mismatch, "nv_mul");
  if (a.known_zero() || b.known_zero()) return nv_zero<F>(a.chi);
  NovikovElem<F> out = nv_zero<F>(a.chi);
  ExtRational ta = a.trunc, tb = b.trunc;
  ExtRational bound = ExtRational::infinity();
  if (!ta.is_infinite()) {
    ExtRational mb = b.min_height_bound();
    bound = mb.is_infinite() ? ExtRational::infinity()
                             : ExtRational::of(*ta.value + *mb.value);
  }
  if (!tb.is_infinite()) {
    ExtRational ma = a.min_height_bound();
    ExtRational other = ma.is_infinite()
                            ? ExtRational::infinity()
                            : ExtRational::of(*tb.value + *ma.value);
    bound = ExtRational::min(bound, other);
  }
  out.trunc = bound;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      Rational h = ka.first + kb.first;
      if (!(ExtRational::of(h) < bound)) continue;
      out.add_term(h, ctx.nf(concat(ka.second, kb.second)), ca * cb);
    }
  return out;
}

// All terms of minimal height, as a group-ring element.
template <typename F>
std::pair<Rational, GroupRingElem<F>> lowest_stratum(const NovikovElem<F>& e) {
  if (e.terms.empty()) fail(errc::zero_element, "lowest_stratum");
  Rational h = e.terms.begin()->first.first;
  GroupRingElem<F> part;
  for (const auto& [key, c] : e.terms) {
    if (key.first != h) break;
    part.add_term(key.second, c);
  }
  return {h, part};
}

// True iff the lowest stratum is a single term c*g.
template <typename F>
bool monomial_lowest(const NovikovElem<F>& e) {
  if (e.terms.empty()) return false;
  auto it = e.terms.begin();
  Rational h = it->first.first;
  ++it;
  return it == e.terms.end() || it->first.first != h;
}

// Inverse up to height T of an element whose lowest stratum is a monomial
// unit c*g: e = c*g*(1 - p) with p strictly positive, and the inverse is
// (1 + p + p^2 + ...) g^-1 c^-1 truncated at T.
template <typename F>
NovikovElem<F> nv_invert(const GroupContext& ctx, const NovikovElem<F>& e,
                         const Rational& t) {
  if (e.terms.empty()) fail(errc::not_monomial_unit, "zero element");
  if (!monomial_lowest(e))
    fail(errc::not_monomial_unit,
         "lowest stratum has more than one term; not attempted");
  Rational h0 = e.terms.begin()->first.first;
  Word w0 = e.terms.begin()->first.second;
  F c0 = e.terms.begin()->second;
  // lead = c0 * w0; lead_inv = w0^-1 * c0^-1
  NovikovElem<F> lead_inv = nv_zero<F>(e.chi);
  lead_inv.add_term(-h0, ctx.nf(inverse(w0)), field_traits<F>::inverse(c0));

  // p = 1 - lead^-1 * e has strictly positive heights, so the Neumann sum
  // stabilizes below any finite height.  Truncation bookkeeping is left to
  // the arithmetic; the result may be trusted below t only.
  NovikovElem<F> p = nv_sub(nv_one<F>(e.chi), nv_mul(ctx, lead_inv, e));
  NovikovElem<F> geom = nv_one<F>(e.chi);
  if (!p.known_zero()) {
    NovikovElem<F> pk = p;
    // Powers whose height bound reaches t + h0 cannot touch the result
    // below t; each factor raises the bound by p's positive lowest height.
    while (pk.min_height_bound() < ExtRational::of(t + h0)) {
      geom = nv_add(geom, pk);
      pk = nv_mul(ctx, pk, p);
    }
  }
  NovikovElem<F> out = nv_mul(ctx, geom, lead_inv);
  if (ExtRational::of(t) <= out.trunc) out = nv_truncate(out, t);
  return out;
}

template <typename F>
std::string nv_to_string(const GroupContext& ctx, const NovikovElem<F>& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << field_traits<F>::str(c) << "*(" << ctx.pres.word_to_string(key.second)
       << ")@" << to_string(key.first);
  }
  if (first) os << "0";
  os << " [T=" << to_string(e.trunc) << "]";
  return os.str();
}

// ---- matrices over the truncated Novikov ring ----

template <typename F>
struct NovikovMatrix {
  size_t rows = 0, cols = 0;
  std::vector<NovikovElem<F>> entries;

  NovikovMatrix() = default;
  NovikovMatrix(size_t r, size_t c, const Character& chi)
      : rows(r), cols(c), entries(r * c, nv_zero<F>(chi)) {}

  NovikovElem<F>& at(size_t i, size_t j) { return entries[i * cols + j]; }
  const NovikovElem<F>& at(size_t i, size_t j) const {
    return entries[i * cols + j];
  }

  static NovikovMatrix identity(size_t n, const Character& chi) {
    NovikovMatrix m(n, n, chi);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = nv_one<F>(chi);
    return m;
  }

  ExtRational trusted_height() const {
    ExtRational t = ExtRational::infinity();
    for (const auto& e : entries) t = ExtRational::min(t, e.trunc);
    return t;
  }
};

template <typename F>
NovikovMatrix<F> nv_mat_from_gr(const GroupContext& ctx,
                                const GroupRingMatrix<F>& m,
                                const Character& chi) {
  NovikovMatrix<F> out(m.rows, m.cols, chi);
  for (size_t i = 0; i < m.entries.size(); ++i)
    out.entries[i] = nv_from_gr(ctx, m.entries[i], chi);
  return out;
}

template <typename F>
NovikovMatrix<F> nv_mat_mul(const GroupContext& ctx, const Character& chi,
                            const NovikovMatrix<F>& a,
                            const NovikovMatrix<F>& b) {
  if (a.cols != b.rows) fail(errc::dimension_mismatch, "novikov mat product");
  NovikovMatrix<F> out(a.rows, b.cols, chi);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < b.cols; ++j) {
      NovikovElem<F> s = nv_zero<F>(chi);
      for (size_t k = 0; k < a.cols; ++k)
        s = nv_add(s, nv_mul(ctx, a.at(i, k), b.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

template <typename F>
NovikovMatrix<F> nv_mat_sub(const NovikovMatrix<F>& a,
                            const NovikovMatrix<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(errc::dimension_mismatch, "novikov mat difference");
  NovikovMatrix<F> out = a;
  for (size_t i = 0; i < a.entries.size(); ++i)
    out.entries[i] = nv_sub(a.entries[i], b.entries[i]);
  return out;
}

}  // namespace sigmastar
