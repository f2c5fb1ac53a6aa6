// Finite group presentations and the text format that carries them.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sigmastar/errors.hpp"
#include "sigmastar/word.hpp"

namespace sigmastar {

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely and cyclically reduced, nonempty

  int generator_index(const std::string& sym) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == sym) return static_cast<int>(i);
    return -1;
  }

  std::string word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << ' ';
      os << generators[gen_of(w[i])];
      if (is_inverse(w[i])) os << "^-1";
    }
    return os.str();
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// A word token is SYM or SYM^EXP with integer EXP.
inline void append_token(const Presentation& p, const std::string& tok,
                         int lineno, Word& w) {
  std::string sym = tok;
  long exp = 1;
  auto caret = tok.find('^');
  if (caret != std::string::npos) {
    sym = tok.substr(0, caret);
    std::string es = tok.substr(caret + 1);
    try {
      size_t used = 0;
      exp = std::stol(es, &used);
      if (used != es.size()) throw std::invalid_argument(es);
    } catch (const std::exception&) {
      fail(errc::syntax_error, "line " + std::to_string(lineno) +
                                   ": bad exponent in '" + tok + "'");
    }
  }
  int gi = p.generator_index(sym);
  if (gi < 0)
    fail(errc::unknown_generator,
         "line " + std::to_string(lineno) + ": '" + sym + "'");
  Letter l = make_letter(gi, exp < 0);
  for (long k = 0; k < std::labs(exp); ++k) w.push_back(l);
}

}  // namespace detail

// Grammar: optional "group NAME"; one "gens SYM..."; zero or more
// "rel WORD" lines; '#' starts a comment.
inline Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "group") {
      if (toks.size() != 2)
        fail(errc::syntax_error,
             "line " + std::to_string(lineno) + ": expected 'group NAME'");
      p.name = toks[1];
    } else if (toks[0] == "gens") {
      if (toks.size() < 2)
        fail(errc::empty_generator_list, "line " + std::to_string(lineno));
      for (size_t i = 1; i < toks.size(); ++i) {
        if (p.generator_index(toks[i]) >= 0)
          fail(errc::syntax_error, "line " + std::to_string(lineno) +
                                       ": duplicate generator '" + toks[i] +
                                       "'");
        p.generators.push_back(toks[i]);
      }
      have_gens = true;
    } else if (toks[0] == "rel") {
      if (!have_gens)
        fail(errc::syntax_error,
             "line " + std::to_string(lineno) + ": 'rel' before 'gens'");
      Word w;
      for (size_t i = 1; i < toks.size(); ++i)
        detail::append_token(p, toks[i], lineno, w);
      w = cyclic_reduce(w);
      if (w.empty())
        fail(errc::empty_relator, "line " + std::to_string(lineno) +
                                      ": relator reduces to the empty word");
      p.relators.push_back(w);
    } else {
      fail(errc::syntax_error, "line " + std::to_string(lineno) +
                                   ": unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_gens) fail(errc::empty_generator_list, "no 'gens' line");
  if (p.name.empty()) p.name = "G";
  return p;
}

}  // namespace sigmastar
