#pragma once

#include <stdexcept>
#include <string>

namespace sigmastar {

enum class errc {
  syntax_error,
  unknown_generator,
  empty_generator_list,
  empty_relator,
  rewriting_incomplete,
  dimension_mismatch,
  character_mismatch,
  truncation_above_knowledge,
  zero_element,
  not_monomial_unit,
  zero_character,
  proper_power_relator,
  not_one_relator,
  degree_out_of_range,
  non_integral_character,
  not_surjective,
  not_a_homomorphism,
  not_transitive,
  not_a_complex,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::empty_generator_list: return "EmptyGeneratorList";
    case errc::empty_relator: return "EmptyRelator";
    case errc::rewriting_incomplete: return "RewritingIncomplete";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::character_mismatch: return "CharacterMismatch";
    case errc::truncation_above_knowledge: return "TruncationAboveKnowledge";
    case errc::zero_element: return "ZeroElement";
    case errc::not_monomial_unit: return "NotMonomialUnit";
    case errc::zero_character: return "ZeroCharacter";
    case errc::proper_power_relator: return "ProperPowerRelator";
    case errc::not_one_relator: return "NotOneRelator";
    case errc::degree_out_of_range: return "DegreeOutOfRange";
    case errc::non_integral_character: return "NonIntegralCharacter";
    case errc::not_surjective: return "NotSurjective";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_a_complex: return "NotAComplex";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace sigmastar
