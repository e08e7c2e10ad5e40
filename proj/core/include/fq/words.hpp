#ifndef FQ_WORDS_HPP
#define FQ_WORDS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fq {

// Ordered alphabet of generator symbols. Names must match
// [a-zA-Z][a-zA-Z0-9_]* and be pairwise distinct.
struct GeneratorSet {
  std::vector<std::string> names;

  static GeneratorSet make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names.size()); }
  // -1 when the name is not declared
  int index_of(std::string_view name) const;

  bool operator==(const GeneratorSet&) const = default;
};

// One signed generator symbol. sign is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;

  bool operator==(const Letter&) const = default;
};

// A word over a generator set: flat sequence of signed letters. Exponent
// sugar is expanded eagerly, so a^3 is stored as three letters.
using Word = std::vector<Letter>;

// Unique freely reduced form: no adjacent x x^-1 pair survives. Idempotent.
Word free_reduce(const Word& w);

bool is_reduced(const Word& w);

Word inverse_word(const Word& w);

Word concat(const Word& a, const Word& b);

// c * w * c^-1
Word conjugate(const Word& w, const Word& c);

Word power(const Word& w, int k);

// Symbol order: generator index ascending, positive before negative.
// Words compare by length first, then pointwise by symbol.
int compare_words(const Word& a, const Word& b);

bool word_in_range(const Word& w, int n_generators);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Token syntax: name, name^k (k a signed integer), or [x,y] for the
// commutator x y x^-1 y^-1. Tokens may be juxtaposed or whitespace
// separated; names are matched longest-first against the declared set.
Word parse_word(std::string_view text, const GeneratorSet& gens);

std::string format_word(const Word& w, const GeneratorSet& gens);

// All freely reduced words of length exactly `len` / at most `max_len`,
// in symbol order. Used by bounded searches and exhaustive tests.
void reduced_words_of_length(int n_generators, int len,
                             const std::function<void(const Word&)>& emit);
std::vector<Word> reduced_words_up_to(int n_generators, int max_len);

}  // namespace fq

#endif
