// Chain complexes of free k[G]-modules in row convention: the boundary
// from degree i is a rank_i x rank_{i-1} matrix acting by v -> v*B.
#pragma once

#include <vector>

#include "sigmastar/groupring.hpp"
#include "sigmastar/novikov.hpp"

namespace sigmastar {

template <typename F>
struct ChainComplex {
  std::vector<size_t> ranks;                  // ranks[i] = rank of C_i
  std::vector<GroupRingMatrix<F>> boundaries;  // boundaries[i] = d_i, i >= 1
  bool exactness_known = false;
  bool one_relator_torsion_free = false;
  std::string kind = "presentation";

  size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }

  const GroupRingMatrix<F>& boundary(size_t i) const { return boundaries[i]; }

  // d_i then d_{i-1} must vanish entrywise in normal forms.
  void validate(const GroupContext& ctx) const {
    if (boundaries.size() != ranks.size())
      fail(errc::not_a_complex, "boundary count mismatch");
    for (size_t i = 1; i < ranks.size(); ++i)
      if (boundaries[i].rows != ranks[i] || boundaries[i].cols != ranks[i - 1])
        fail(errc::not_a_complex, "boundary shape mismatch");
    for (size_t i = 1; i + 1 < ranks.size(); ++i)
      if (!mat_mul(ctx, boundaries[i + 1], boundaries[i]).is_zero())
        fail(errc::not_a_complex,
             "dd != 0 between degrees " + std::to_string(i + 1) + " and " +
                 std::to_string(i));
  }
};

// 2-skeleton complex of a presentation:
//   k[G]^{|R|} --Fox--> k[G]^{|X|} --(x-1)--> k[G].
template <typename F>
ChainComplex<F> presentation_complex(const GroupContext& ctx) {
  if (!ctx.rs.complete)
    fail(errc::rewriting_incomplete, "presentation_complex");
  size_t nx = ctx.pres.generators.size(), nr = ctx.pres.relators.size();
  ChainComplex<F> c;
  c.ranks = {1, nx, nr};
  c.boundaries.resize(3);
  c.boundaries[1] = GroupRingMatrix<F>(nx, 1);
  for (size_t x = 0; x < nx; ++x) {
    GroupRingElem<F> e;
    e.add_term(ctx.nf({make_letter(static_cast<int>(x), false)}),
               field_traits<F>::one());
    e.add_term(Word{}, -field_traits<F>::one());
    c.boundaries[1].at(x, 0) = e;
  }
  c.boundaries[2] = GroupRingMatrix<F>(nr, nx);
  for (size_t r = 0; r < nr; ++r)
    for (size_t x = 0; x < nx; ++x)
      c.boundaries[2].at(r, x) =
          fox_derivative<F>(ctx, ctx.pres.relators[r], static_cast<int>(x));
  if (nr == 0) {
    c.ranks.pop_back();  // free group: no degree-2 part
    c.boundaries.pop_back();
    c.exactness_known = true;  // the complex is the full free resolution
  }
  c.validate(ctx);
  return c;
}

// Same matrices for a torsion-free one-relator presentation; the Lyndon
// identity theorem promises this is a free resolution, so homology of the
// complex is homology of the group.
template <typename F>
ChainComplex<F> lyndon_complex(const GroupContext& ctx) {
  if (ctx.pres.relators.size() != 1)
    fail(errc::not_one_relator,
         std::to_string(ctx.pres.relators.size()) + " relators");
  if (is_proper_power(ctx.pres.relators[0]))
    fail(errc::proper_power_relator, "relator is a proper power");
  ChainComplex<F> c = presentation_complex<F>(ctx);
  c.exactness_known = true;
  c.one_relator_torsion_free = true;
  c.kind = "lyndon";
  return c;
}

// Involution-transpose dual with reversed degrees.
template <typename F>
ChainComplex<F> dualize(const GroupContext& ctx, const ChainComplex<F>& c) {
  ChainComplex<F> d;
  d.kind = c.kind + "-dual";
  d.exactness_known = false;
  size_t L = c.top();
  d.ranks.resize(L + 1);
  d.boundaries.resize(L + 1);
  for (size_t j = 0; j <= L; ++j) d.ranks[j] = c.ranks[L - j];
  for (size_t j = 1; j <= L; ++j)
    d.boundaries[j] = involute_transpose(ctx, c.boundaries[L - j + 1]);
  d.validate(ctx);
  return d;
}

template <typename F>
struct NovikovComplex {
  Character chi;
  std::vector<size_t> ranks;
  std::vector<NovikovMatrix<F>> boundaries;  // exact entries, T = infinity

  size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

template <typename F>
NovikovComplex<F> tensor_novikov(const GroupContext& ctx,
                                 const ChainComplex<F>& c,
                                 const Character& chi) {
  if (chi.is_zero()) fail(errc::zero_character, "tensor_novikov");
  NovikovComplex<F> n;
  n.chi = chi;
  n.ranks = c.ranks;
  n.boundaries.resize(c.boundaries.size());
  for (size_t i = 1; i < c.boundaries.size(); ++i)
    n.boundaries[i] = nv_mat_from_gr(ctx, c.boundaries[i], chi);
  return n;
}

}  // namespace sigmastar
