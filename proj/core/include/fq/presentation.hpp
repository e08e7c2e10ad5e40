#ifndef FQ_PRESENTATION_HPP
#define FQ_PRESENTATION_HPP

#include <string>
#include <vector>

#include "fq/words.hpp"

namespace fq {

struct MarkedGroup;

// Finite presentation. Relators are stored freely reduced; words that
// reduce to nothing are dropped. Relator order is preserved as given.
struct Presentation {
  GeneratorSet generators;
  std::vector<Word> relators;

  static Presentation make(GeneratorSet gens, std::vector<Word> relators);

  int rank() const { return generators.size(); }
};

// Grammar: '<' name (',' name)* '|' [word (',' word)*] '>'
// Words use the token syntax of parse_word.
Presentation parse_presentation(std::string_view text);

std::string format_presentation(const Presentation& p);

// <S | R ∪ extra>, with reduction applied and empty words dropped.
Presentation add_relators(const Presentation& p, const std::vector<Word>& extra);

// Presentation of the semidirect product  acting ⋉ (base)^acting  where the
// acting group permutes coordinates by translation: generators are the base
// generators plus `acting_names` (one per marking entry of `acting`),
// relators are the base relators, multiplication-table relators for the
// acting group, and commutators [h g1 h^-1, g2] for base generators g1, g2
// and every nonidentity acting element h (as the word element_words[h]).
//
// element_words[h] must evaluate to element h under the acting marking;
// element_words[0] is ignored. An acting group of order 1 returns `base`
// unchanged.
Presentation wreath_presentation(const Presentation& base, const MarkedGroup& acting,
                                 const GeneratorSet& acting_names,
                                 const std::vector<Word>& element_words);

// Canonical element words for a marked group: breadth-first shortest
// preimages, ties broken by symbol order. element_words[e] for every element.
std::vector<Word> canonical_element_words(const MarkedGroup& m);

}  // namespace fq

#endif
