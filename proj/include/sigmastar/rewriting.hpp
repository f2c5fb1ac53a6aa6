// String rewriting over group alphabets: reduction orders, rewriting to
// normal form, Knuth-Bendix completion, and a confluence checker.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "sigmastar/errors.hpp"
#include "sigmastar/presentation.hpp"
#include "sigmastar/word.hpp"

namespace sigmastar {

// Total reduction order on words: the basic wreath-product order determined
// by per-generator levels, with shortlex within each level.  All levels
// equal degenerates to plain shortlex, the default.
struct WordOrder {
  std::vector<int> levels;  // per generator; inverses share the level

  static WordOrder shortlex(size_t ngens) {
    return WordOrder{std::vector<int>(ngens, 1)};
  }

  int level_of(Letter l) const { return levels[gen_of(l)]; }

  // -1 / 0 / +1 comparison of subwords [ab, ae) and [bb, be).
  int cmp(const Word& a, size_t ab, size_t ae, const Word& b, size_t bb,
          size_t be) const {
    if (ab == ae && bb == be) return 0;
    int top = 0;
    for (size_t i = ab; i < ae; ++i) top = std::max(top, level_of(a[i]));
    for (size_t i = bb; i < be; ++i) top = std::max(top, level_of(b[i]));
    // Skeletons at the top level compare shortlex first.
    std::vector<size_t> sa, sb;
    for (size_t i = ab; i < ae; ++i)
      if (level_of(a[i]) == top) sa.push_back(i);
    for (size_t i = bb; i < be; ++i)
      if (level_of(b[i]) == top) sb.push_back(i);
    if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
    for (size_t k = 0; k < sa.size(); ++k) {
      int ra = letter_rank(a[sa[k]]), rb = letter_rank(b[sb[k]]);
      if (ra != rb) return ra < rb ? -1 : 1;
    }
    // Equal skeletons: compare the lower-level gaps left to right.
    size_t pa = ab, pb = bb;
    for (size_t k = 0; k <= sa.size(); ++k) {
      size_t qa = k < sa.size() ? sa[k] : ae;
      size_t qb = k < sb.size() ? sb[k] : be;
      int c = cmp(a, pa, qa, b, pb, qb);
      if (c != 0) return c;
      pa = qa + 1;
      pb = qb + 1;
    }
    return 0;
  }

  // true iff a < b
  bool less(const Word& a, const Word& b) const {
    if (levels.empty()) {  // uninitialized: plain shortlex
      if (a.size() != b.size()) return a.size() < b.size();
      for (size_t i = 0; i < a.size(); ++i)
        if (letter_rank(a[i]) != letter_rank(b[i]))
          return letter_rank(a[i]) < letter_rank(b[i]);
      return false;
    }
    return cmp(a, 0, a.size(), b, 0, b.size()) < 0;
  }
};

struct Rule {
  Word lhs, rhs;  // lhs > rhs in the system's order
};

namespace detail {

using RuleIndex = std::map<Letter, std::vector<int>>;

inline RuleIndex index_rules(const std::vector<Rule>& rules,
                             const std::vector<char>* alive = nullptr) {
  RuleIndex ix;
  for (size_t i = 0; i < rules.size(); ++i)
    if (!alive || (*alive)[i]) ix[rules[i].lhs.back()].push_back((int)i);
  return ix;
}

// Leftmost-innermost rewriting with a suffix-matching stack.  The prefix
// `out` is irreducible whenever a new letter is consumed from `pending`.
inline Word reduce_word(const Word& w, const std::vector<Rule>& rules,
                        const RuleIndex& ix) {
  Word out;
  out.reserve(w.size());
  std::vector<Letter> pending(w.rbegin(), w.rend());
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    for (;;) {
      if (out.empty()) break;
      auto it = ix.find(out.back());
      if (it == ix.end()) break;
      const Rule* hit = nullptr;
      for (int ri : it->second) {
        const Rule& r = rules[ri];
        if (r.lhs.size() > out.size()) continue;
        if (std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) {
          hit = &r;
          break;
        }
      }
      if (!hit) break;
      out.resize(out.size() - hit->lhs.size());
      pending.insert(pending.end(), hit->rhs.rbegin(), hit->rhs.rend());
    }
  }
  return out;
}

// Critical pairs of (lhs1 -> rhs1) against (lhs2 -> rhs2): proper overlaps
// where a suffix of lhs1 is a prefix of lhs2, and containments of lhs2 in
// lhs1.  Emits the two one-step reducts of the superposed word.
template <typename Emit>
void critical_pairs(const Rule& r1, const Rule& r2, Emit&& emit) {
  const Word &l1 = r1.lhs, &l2 = r2.lhs;
  size_t maxov = std::min(l1.size(), l2.size()) - 1;
  for (size_t k = 1; k <= maxov; ++k) {
    if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
    // l1 = u v, l2 = v w with |v| = k
    Word a = r1.rhs;  // r1 applied: rhs1 . w
    a.insert(a.end(), l2.begin() + k, l2.end());
    Word b(l1.begin(), l1.end() - k);  // r2 applied: u . rhs2
    b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
    emit(a, b);
  }
  if (l2.size() < l1.size()) {
    for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
      if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
      Word b(l1.begin(), l1.begin() + pos);
      b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
      b.insert(b.end(), l1.begin() + pos + l2.size(), l1.end());
      emit(r1.rhs, b);
    }
  }
}

}  // namespace detail

class RewritingSystem {
 public:
  std::vector<Rule> rules;
  WordOrder order;
  bool complete = false;

  Word rewrite(const Word& w) const {
    return detail::reduce_word(w, rules, index_);
  }

  void reindex() { index_ = detail::index_rules(rules); }

 private:
  detail::RuleIndex index_;
};

inline Word normal_form(const RewritingSystem& rs, const Word& w) {
  if (!rs.complete)
    fail(errc::rewriting_incomplete, "normal forms need a complete system");
  return rs.rewrite(w);
}

// Independent confluence check by exhaustive overlap enumeration.  Assumes
// termination (rules are order-decreasing by construction).
inline bool verify_confluent(const RewritingSystem& rs) {
  for (const Rule& r1 : rs.rules)
    for (const Rule& r2 : rs.rules) {
      bool ok = true;
      detail::critical_pairs(r1, r2, [&](const Word& a, const Word& b) {
        if (ok && rs.rewrite(a) != rs.rewrite(b)) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

// Knuth-Bendix completion.  Starts from the free-reduction rules plus the
// oriented relators; complete = true iff the pair queue empties within the
// rule-count and lhs-length bounds (confirmed by a final confluence check).
inline RewritingSystem knuth_bendix(const Presentation& p, int max_rules,
                                    int max_len, WordOrder order = {}) {
  if (order.levels.empty()) order = WordOrder::shortlex(p.generators.size());

  std::vector<Rule> rules;
  std::vector<char> alive;
  detail::RuleIndex ix;
  bool dirty = true;
  auto reduce = [&](const Word& w) {
    if (dirty) {
      ix = detail::index_rules(rules, &alive);
      dirty = false;
    }
    return detail::reduce_word(w, rules, ix);
  };
  auto add_rule = [&](Word lhs, Word rhs) {
    rules.push_back({std::move(lhs), std::move(rhs)});
    alive.push_back(1);
    dirty = true;
  };

  for (size_t g = 0; g < p.generators.size(); ++g) {
    Letter x = make_letter(static_cast<int>(g), false);
    add_rule({x, -x}, {});
    add_rule({-x, x}, {});
  }

  std::deque<std::pair<Word, Word>> eqs;
  for (const Word& r : p.relators) eqs.emplace_back(r, Word{});
  std::deque<std::pair<int, int>> pairs;
  for (size_t i = 0; i < rules.size(); ++i)
    for (size_t j = 0; j < rules.size(); ++j)
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

  bool within_bounds = true;
  size_t live_count = alive.size();

  while (within_bounds && (!eqs.empty() || !pairs.empty())) {
    if (eqs.empty()) {
      auto [i, j] = pairs.front();
      pairs.pop_front();
      if (!alive[i] || !alive[j]) continue;
      detail::critical_pairs(rules[i], rules[j], [&](Word u, Word v) {
        eqs.emplace_back(std::move(u), std::move(v));
      });
      continue;
    }
    Word a = reduce(eqs.front().first);
    Word b = reduce(eqs.front().second);
    eqs.pop_front();
    if (a == b) continue;
    if (order.less(a, b)) std::swap(a, b);

    if (static_cast<int>(a.size()) > max_len ||
        live_count + 1 > static_cast<size_t>(max_rules)) {
      within_bounds = false;
      break;
    }

    int ni = static_cast<int>(rules.size());
    add_rule(a, b);
    ++live_count;

    // Interreduce: rules whose lhs the new rule rewrites go back into the
    // equation queue; their consequences are re-derived from live rules.
    for (int k = 0; k < ni; ++k) {
      if (!alive[k]) continue;
      const Word& lk = rules[k].lhs;
      bool reducible = false;
      if (a.size() <= lk.size())
        for (size_t pos = 0; pos + a.size() <= lk.size() && !reducible; ++pos)
          reducible = std::equal(a.begin(), a.end(), lk.begin() + pos);
      if (reducible) {
        alive[k] = 0;
        --live_count;
        dirty = true;
        eqs.emplace_back(rules[k].lhs, rules[k].rhs);
      }
    }
    for (int k = 0; k <= ni; ++k) {
      if (!alive[k]) continue;
      pairs.emplace_back(ni, k);
      if (k != ni) pairs.emplace_back(k, ni);
    }
  }

  RewritingSystem out;
  out.order = order;
  for (size_t i = 0; i < rules.size(); ++i)
    if (alive[i]) out.rules.push_back(rules[i]);
  out.reindex();
  for (auto& r : out.rules) r.rhs = out.rewrite(r.rhs);
  out.reindex();
  out.complete = within_bounds && verify_confluent(out);
  return out;
}

// Completion with a deterministic order schedule: plain shortlex first, then
// one generator at a time raised to level 2 (last generator first, since
// stable letters conventionally come last).  Returns the first complete
// system, or the shortlex attempt flagged incomplete.
inline RewritingSystem complete_presentation(const Presentation& p,
                                             int max_rules = 256,
                                             int max_len = 32) {
  size_t n = p.generators.size();
  std::vector<WordOrder> schedule{WordOrder::shortlex(n)};
  for (size_t i = n; i-- > 0;) {
    WordOrder o = WordOrder::shortlex(n);
    o.levels[i] = 2;
    schedule.push_back(o);
  }
  RewritingSystem first;
  for (size_t k = 0; k < schedule.size(); ++k) {
    RewritingSystem rs = knuth_bendix(p, max_rules, max_len, schedule[k]);
    if (rs.complete) return rs;
    if (k == 0) first = rs;
  }
  return first;
}

}  // namespace sigmastar
