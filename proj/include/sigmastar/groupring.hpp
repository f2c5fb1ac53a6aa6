// Exact arithmetic in k[G] with normal-form words as basis, plus Fox
// derivatives.  A GroupContext carries the equality oracle; every public
// operation keeps keys in normal form.
#pragma once

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sigmastar/abelian.hpp"
#include "sigmastar/character.hpp"
#include "sigmastar/errors.hpp"
#include "sigmastar/fields.hpp"
#include "sigmastar/presentation.hpp"
#include "sigmastar/rewriting.hpp"

namespace sigmastar {

struct GroupContext {
  Presentation pres;
  RewritingSystem rs;
  AbelianizationData ab;

  static GroupContext make(Presentation p, int max_rules = 256,
                           int max_len = 32) {
    GroupContext ctx;
    ctx.rs = complete_presentation(p, max_rules, max_len);
    ctx.ab = abelianize(p);
    ctx.pres = std::move(p);
    return ctx;
  }

  Word nf(const Word& w) const { return normal_form(rs, free_reduce(w)); }

  Rational height(const Character& chi, const Word& w) const {
    return chi.pair(ab.project(w));
  }
};

template <typename F>
struct GroupRingElem {
  std::map<Word, F> terms;  // normal-form word -> nonzero coefficient

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const F& c) {
    if (field_traits<F>::is_zero(c)) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (field_traits<F>::is_zero(it->second)) terms.erase(it);
    }
  }

  friend GroupRingElem operator+(const GroupRingElem& a,
                                 const GroupRingElem& b) {
    GroupRingElem out = a;
    for (const auto& [w, c] : b.terms) out.add_term(w, c);
    return out;
  }
  friend GroupRingElem operator-(const GroupRingElem& a,
                                 const GroupRingElem& b) {
    GroupRingElem out = a;
    for (const auto& [w, c] : b.terms) out.add_term(w, -c);
    return out;
  }
  GroupRingElem operator-() const {
    GroupRingElem out;
    for (const auto& [w, c] : terms) out.terms.emplace(w, -c);
    return out;
  }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.terms == b.terms;
  }
};

template <typename F>
GroupRingElem<F> gr_zero() {
  return {};
}

template <typename F>
GroupRingElem<F> gr_scalar(const F& c) {
  GroupRingElem<F> e;
  e.add_term({}, c);
  return e;
}

template <typename F>
GroupRingElem<F> gr_one() {
  return gr_scalar<F>(field_traits<F>::one());
}

template <typename F>
GroupRingElem<F> gr_word(const GroupContext& ctx, const Word& w,
                         const F& c = field_traits<F>::one()) {
  GroupRingElem<F> e;
  e.add_term(ctx.nf(w), c);
  return e;
}

template <typename F>
GroupRingElem<F> gr_mul(const GroupContext& ctx, const GroupRingElem<F>& a,
                        const GroupRingElem<F>& b) {
  GroupRingElem<F> out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms)
      out.add_term(ctx.nf(concat(wa, wb)), ca * cb);
  return out;
}

// Sum r_g g  ->  sum r_g g^-1; an anti-automorphism.
template <typename F>
GroupRingElem<F> involute(const GroupContext& ctx, const GroupRingElem<F>& a) {
  GroupRingElem<F> out;
  for (const auto& [w, c] : a.terms) out.add_term(ctx.nf(inverse(w)), c);
  return out;
}

template <typename F>
F augmentation(const GroupRingElem<F>& a) {
  F s = field_traits<F>::zero();
  for (const auto& [w, c] : a.terms) s += c;
  return s;
}

// Free-differential derivative of r with respect to generator x, projected
// into k[G]: d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1.
template <typename F>
GroupRingElem<F> fox_derivative(const GroupContext& ctx, const Word& r,
                                int gen_index) {
  GroupRingElem<F> out;
  Word prefix;
  for (Letter l : r) {
    if (gen_of(l) == gen_index) {
      if (!is_inverse(l)) {
        out.add_term(ctx.nf(prefix), field_traits<F>::one());
      } else {
        Word w = prefix;
        w.push_back(l);  // prefix . x^-1
        out.add_term(ctx.nf(w), -field_traits<F>::one());
      }
    }
    prefix.push_back(l);
  }
  return out;
}

template <typename F>
std::string gr_to_string(const GroupContext& ctx, const GroupRingElem<F>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << field_traits<F>::str(c) << "*(" << ctx.pres.word_to_string(w) << ")";
  }
  return os.str();
}

// Abelianized supports, deduplicated; the raw material of cone constraints.
template <typename F>
std::set<std::vector<Integer>> support_vectors(const GroupContext& ctx,
                                               const GroupRingElem<F>& a) {
  std::set<std::vector<Integer>> s;
  for (const auto& [w, c] : a.terms) s.insert(ctx.ab.project(w));
  return s;
}

template <typename F>
struct GroupRingMatrix {
  size_t rows = 0, cols = 0;
  std::vector<GroupRingElem<F>> entries;  // row-major

  GroupRingMatrix() = default;
  GroupRingMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}

  GroupRingElem<F>& at(size_t i, size_t j) { return entries[i * cols + j]; }
  const GroupRingElem<F>& at(size_t i, size_t j) const {
    return entries[i * cols + j];
  }

  bool is_zero() const {
    for (const auto& e : entries)
      if (!e.is_zero()) return false;
    return true;
  }

  static GroupRingMatrix identity(size_t n) {
    GroupRingMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = gr_one<F>();
    return m;
  }
};

template <typename F>
GroupRingMatrix<F> mat_mul(const GroupContext& ctx,
                           const GroupRingMatrix<F>& a,
                           const GroupRingMatrix<F>& b) {
  if (a.cols != b.rows) fail(errc::dimension_mismatch, "matrix product");
  GroupRingMatrix<F> out(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + gr_mul(ctx, a.at(i, k), b.at(k, j));
      }
    }
  return out;
}

template <typename F>
GroupRingMatrix<F> mat_sub(const GroupRingMatrix<F>& a,
                           const GroupRingMatrix<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(errc::dimension_mismatch, "matrix difference");
  GroupRingMatrix<F> out(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i)
    out.entries[i] = a.entries[i] - b.entries[i];
  return out;
}

// Transpose with involuted entries; contravariant dual of a map.
template <typename F>
GroupRingMatrix<F> involute_transpose(const GroupContext& ctx,
                                      const GroupRingMatrix<F>& a) {
  GroupRingMatrix<F> out(a.cols, a.rows);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j)
      out.at(j, i) = involute(ctx, a.at(i, j));
  return out;
}

}  // namespace sigmastar
