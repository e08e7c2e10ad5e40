#include "fq/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "fq/cayley.hpp"

namespace fq {

Presentation Presentation::make(GeneratorSet gens, std::vector<Word> relators) {
  Presentation p;
  p.generators = std::move(gens);
  for (auto& r : relators) {
    if (!word_in_range(r, p.generators.size())) {
      throw std::invalid_argument("relator uses out-of-range generator");
    }
    Word red = free_reduce(r);
    if (!red.empty()) p.relators.push_back(std::move(red));
  }
  return p;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '<') throw ParseError("expected '<'", pos);
  ++pos;

  std::vector<std::string> names;
  while (true) {
    skip_ws(text, pos);
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) throw ParseError("expected generator name", pos);
    names.emplace_back(text.substr(start, pos - start));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != '|') throw ParseError("expected '|'", pos);
  ++pos;

  GeneratorSet gens = GeneratorSet::make(names);

  std::vector<Word> relators;
  skip_ws(text, pos);
  while (pos < text.size() && text[pos] != '>') {
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (depth == 0 && (c == ',' || c == '>')) break;
      ++pos;
    }
    std::string_view chunk = text.substr(start, pos - start);
    Word w = parse_word(chunk, gens);
    relators.push_back(std::move(w));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws(text, pos);
    }
  }
  if (pos >= text.size() || text[pos] != '>') throw ParseError("expected '>'", pos);
  ++pos;
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after '>'", pos);

  return Presentation::make(std::move(gens), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.names.size(); ++i) {
    if (i) out += ", ";
    out += p.generators.names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generators);
  }
  out += " >";
  return out;
}

Presentation add_relators(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> all = p.relators;
  all.insert(all.end(), extra.begin(), extra.end());
  return Presentation::make(p.generators, std::move(all));
}

std::vector<Word> canonical_element_words(const MarkedGroup& m) {
  const CayleyGroup& g = m.group;
  std::vector<Word> words(static_cast<std::size_t>(g.order));
  std::vector<bool> seen(static_cast<std::size_t>(g.order), false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < m.n_marks(); ++i) {
      for (int sign : {1, -1}) {
        int img = sign > 0 ? m.marking[static_cast<std::size_t>(i)]
                           : g.inv(m.marking[static_cast<std::size_t>(i)]);
      int y = g.mul(x, img);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          words[static_cast<std::size_t>(y)] = words[static_cast<std::size_t>(x)];
          words[static_cast<std::size_t>(y)].push_back({i, sign});
          queue.push_back(y);
        }
      }
    }
  }
  for (bool s : seen) {
    if (!s) throw CayleyError(CayleyError::Code::marking_does_not_generate,
                              "marking does not generate the group");
  }
  return words;
}

Presentation wreath_presentation(const Presentation& base, const MarkedGroup& acting,
                                 const GeneratorSet& acting_names,
                                 const std::vector<Word>& element_words) {
  const CayleyGroup& h = acting.group;
  if (h.order == 1) return base;
  if (acting_names.size() != acting.n_marks()) {
    throw CayleyError(CayleyError::Code::arity_mismatch,
                      "one acting name per marking entry required");
  }
  if (static_cast<int>(element_words.size()) != h.order) {
    throw std::invalid_argument("element_words must cover every acting element");
  }
  for (const auto& n : acting_names.names) {
    if (base.generators.index_of(n) >= 0) {
      throw std::invalid_argument("acting generator name collides with base: " + n);
    }
  }
  // each word must evaluate to its element
  for (int e = 1; e < h.order; ++e) {
    int v = evaluate_word(acting, element_words[static_cast<std::size_t>(e)]);
    if (v != e) {
      throw std::invalid_argument("element word evaluates to wrong acting element");
    }
  }

  std::vector<std::string> names = base.generators.names;
  names.insert(names.end(), acting_names.names.begin(), acting_names.names.end());
  GeneratorSet gens = GeneratorSet::make(std::move(names));
  int off = base.generators.size();

  auto lift = [&](const Word& w) {  // word over acting_names -> combined alphabet
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) out.push_back({l.gen + off, l.sign});
    return out;
  };

  std::vector<Word> relators = base.relators;

  // acting marking generators pinned to their element words
  for (int i = 0; i < acting.n_marks(); ++i) {
    int e = acting.marking[static_cast<std::size_t>(i)];
    Word pin = concat(Word{{i + off, 1}},
                      inverse_word(lift(element_words[static_cast<std::size_t>(e)])));
    relators.push_back(pin);
  }
  // multiplication table of the acting group
  for (int x = 0; x < h.order; ++x) {
    for (int y = 0; y < h.order; ++y) {
      Word r = concat(lift(element_words[static_cast<std::size_t>(x)]),
                      lift(element_words[static_cast<std::size_t>(y)]));
      r = concat(r, inverse_word(lift(element_words[static_cast<std::size_t>(h.mul(x, y))])));
      relators.push_back(r);
    }
  }
  // coordinate copies of the base commute: [h g1 h^-1, g2]
  for (int e = 1; e < h.order; ++e) {
    Word hw = lift(element_words[static_cast<std::size_t>(e)]);
    for (int g1 = 0; g1 < base.generators.size(); ++g1) {
      Word cg1 = conjugate(Word{{g1, 1}}, hw);
      for (int g2 = 0; g2 < base.generators.size(); ++g2) {
        Word comm = concat(concat(cg1, Word{{g2, 1}}),
                           concat(inverse_word(cg1), Word{{g2, -1}}));
        relators.push_back(comm);
      }
    }
  }
  return Presentation::make(std::move(gens), std::move(relators));
}

}  // namespace fq
