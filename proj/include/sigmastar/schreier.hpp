// Reidemeister-Schreier: presentation of the stabilizer of a point under a
// transitive permutation action, via a shortlex-least Schreier transversal.
#pragma once

#include <map>
#include <queue>
#include <vector>

#include "sigmastar/errors.hpp"
#include "sigmastar/presentation.hpp"

namespace sigmastar {

// One permutation of {0..n-1} per generator.
using PermRep = std::vector<std::vector<int>>;

inline int perm_apply(const PermRep& rep, Letter l, int point) {
  const auto& p = rep[gen_of(l)];
  if (!is_inverse(l)) return p[point];
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] == point) return i;
  fail(errc::not_a_homomorphism, "not a permutation");
}

inline int perm_apply_word(const PermRep& rep, const Word& w, int point) {
  for (Letter l : w) point = perm_apply(rep, l, point);
  return point;
}

struct SubgroupPresentation {
  Presentation pres;
  std::vector<Word> embeddings;  // each subgroup generator as a word in G
};

inline SubgroupPresentation reidemeister_schreier(const Presentation& p,
                                                  const PermRep& rep) {
  size_t ngens = p.generators.size();
  if (rep.size() != ngens)
    fail(errc::dimension_mismatch, "one permutation per generator");
  size_t n = rep.empty() ? 1 : rep[0].size();
  for (const auto& perm : rep) {
    if (perm.size() != n) fail(errc::dimension_mismatch, "permutation degree");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
      if (v < 0 || v >= static_cast<int>(n) || seen[v])
        fail(errc::not_a_homomorphism, "not a permutation");
      seen[v] = 1;
    }
  }
  for (const Word& r : p.relators)
    for (int pt = 0; pt < static_cast<int>(n); ++pt)
      if (perm_apply_word(rep, r, pt) != pt)
        fail(errc::not_a_homomorphism, "relator acts nontrivially");

  // BFS transversal: prefix-closed, shortlex-least coset representatives.
  std::vector<Word> transversal(n);
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int pt = bfs.front();
    bfs.pop();
    for (size_t g = 0; g < ngens; ++g)
      for (bool inv : {false, true}) {
        Letter l = make_letter(static_cast<int>(g), inv);
        int q = perm_apply(rep, l, pt);
        if (!reached[q]) {
          reached[q] = 1;
          transversal[q] = transversal[pt];
          transversal[q].push_back(l);
          bfs.push(q);
        }
      }
  }
  for (char r : reached)
    if (!r) fail(errc::not_transitive, "action is not transitive");

  // Schreier generators s_{pt,g} = w_pt g w_{pt.g}^-1; tree edges vanish.
  std::map<std::pair<int, int>, int> schreier_index;  // (point, gen) -> index
  std::vector<std::string> sub_gens;
  std::vector<Word> sub_gen_words;
  for (int pt = 0; pt < static_cast<int>(n); ++pt)
    for (size_t g = 0; g < ngens; ++g) {
      Letter l = make_letter(static_cast<int>(g), false);
      int q = perm_apply(rep, l, pt);
      Word s = transversal[pt];
      s.push_back(l);
      Word back = inverse(transversal[q]);
      s.insert(s.end(), back.begin(), back.end());
      s = free_reduce(s);
      if (s.empty()) continue;  // tree edge
      schreier_index[{pt, static_cast<int>(g)}] =
          static_cast<int>(sub_gens.size());
      sub_gens.push_back(n == 1 ? p.generators[g]
                                : p.generators[g] + "_" + std::to_string(pt + 1));
      sub_gen_words.push_back(s);
    }

  // Reidemeister rewriting of w_pt r w_pt^-1 into Schreier generators.
  auto rewrite = [&](const Word& w) {
    Word out;
    int pt = 0;
    for (Letter l : w) {
      int g = gen_of(l);
      if (!is_inverse(l)) {
        auto it = schreier_index.find({pt, g});
        if (it != schreier_index.end())
          out.push_back(make_letter(it->second, false));
        pt = perm_apply(rep, l, pt);
      } else {
        pt = perm_apply(rep, l, pt);
        auto it = schreier_index.find({pt, g});
        if (it != schreier_index.end())
          out.push_back(make_letter(it->second, true));
      }
    }
    return free_reduce(out);
  };

  SubgroupPresentation out;
  out.pres.name = p.name + "_stab1";
  out.pres.generators = sub_gens;
  out.embeddings = sub_gen_words;
  for (const Word& r : p.relators)
    for (int pt = 0; pt < static_cast<int>(n); ++pt) {
      Word conj = transversal[pt];
      conj.insert(conj.end(), r.begin(), r.end());
      Word back = inverse(transversal[pt]);
      conj.insert(conj.end(), back.begin(), back.end());
      Word rel = cyclic_reduce(rewrite(conj));
      if (rel.empty()) continue;  // trivial relator dropped
      bool dup = false;
      for (const Word& existing : out.pres.relators) dup |= (existing == rel);
      if (!dup) out.pres.relators.push_back(rel);
    }
  return out;
}

}  // namespace sigmastar
