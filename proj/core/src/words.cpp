#include "fq/words.hpp"

#include <algorithm>
#include <cctype>

namespace fq {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

GeneratorSet GeneratorSet::make(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("generator set must be nonempty");
  for (const auto& n : names) {
    if (!valid_name(n)) throw std::invalid_argument("bad generator name: '" + n + "'");
  }
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate generator name");
  }
  GeneratorSet g;
  g.names = std::move(names);
  return g;
}

int GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) return false;
  }
  return true;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->sign});
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word conjugate(const Word& w, const Word& c) {
  Word out = c;
  out.insert(out.end(), w.begin(), w.end());
  Word ci = inverse_word(c);
  out.insert(out.end(), ci.begin(), ci.end());
  return out;
}

Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : inverse_word(w);
  int reps = k >= 0 ? k : -k;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

namespace {
// +1 < -1 for the same generator
int letter_rank(const Letter& l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }
}  // namespace

int compare_words(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

bool word_in_range(const Word& w, int n_generators) {
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= n_generators) return false;
    if (l.sign != 1 && l.sign != -1) return false;
  }
  return true;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

// Longest declared name that prefixes text at cursor. -1 if none.
int match_name(Cursor& cur, const GeneratorSet& gens) {
  cur.skip_ws();
  int best = -1;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < gens.names.size(); ++i) {
    const std::string& n = gens.names[i];
    if (n.size() > best_len && cur.text.substr(cur.pos, n.size()) == n) {
      best = static_cast<int>(i);
      best_len = n.size();
    }
  }
  if (best >= 0) cur.pos += best_len;
  return best;
}

long parse_int(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  bool neg = false;
  if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+')) {
    neg = cur.text[cur.pos] == '-';
    ++cur.pos;
  }
  long v = 0;
  bool any = false;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
    v = v * 10 + (cur.text[cur.pos] - '0');
    if (v > 1000000) throw ParseError("exponent too large", start);
    ++cur.pos;
    any = true;
  }
  if (!any) throw ParseError("expected integer", start);
  return neg ? -v : v;
}

void parse_word_into(Cursor& cur, const GeneratorSet& gens, Word& out,
                     const char* stoppers) {
  while (!cur.done()) {
    char c = cur.peek();
    if (std::string_view(stoppers).find(c) != std::string_view::npos) return;
    if (c == '[') {
      std::size_t at = cur.pos;
      cur.eat('[');
      int x = match_name(cur, gens);
      if (x < 0) throw ParseError("unknown generator in commutator", cur.pos);
      if (!cur.eat(',')) throw ParseError("expected ',' in commutator", cur.pos);
      int y = match_name(cur, gens);
      if (y < 0) throw ParseError("unknown generator in commutator", cur.pos);
      if (!cur.eat(']')) throw ParseError("unclosed commutator", at);
      out.push_back({x, 1});
      out.push_back({y, 1});
      out.push_back({x, -1});
      out.push_back({y, -1});
      continue;
    }
    int g = match_name(cur, gens);
    if (g < 0) throw ParseError("unknown generator name", cur.pos);
    long k = 1;
    if (cur.peek() == '^') {
      cur.eat('^');
      k = parse_int(cur);
    }
    Letter l{g, k >= 0 ? 1 : -1};
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) out.push_back(l);
  }
}

}  // namespace

Word parse_word(std::string_view text, const GeneratorSet& gens) {
  Cursor cur{text};
  Word out;
  parse_word_into(cur, gens, out, "");
  if (!cur.done()) throw ParseError("trailing input after word", cur.pos);
  return out;
}

std::string format_word(const Word& w, const GeneratorSet& gens) {
  if (w.empty()) return "";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += gens.names[static_cast<std::size_t>(w[i].gen)];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

void reduced_words_of_length(int n_generators, int len,
                             const std::function<void(const Word&)>& emit) {
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  // symbols in rank order so enumeration is deterministic
  std::vector<Letter> symbols;
  for (int g = 0; g < n_generators; ++g) {
    symbols.push_back({g, 1});
    symbols.push_back({g, -1});
  }
  std::function<void()> rec = [&]() {
    if (static_cast<int>(w.size()) == len) {
      emit(w);
      return;
    }
    for (const Letter& l : symbols) {
      if (!w.empty() && w.back().gen == l.gen && w.back().sign == -l.sign) continue;
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::vector<Word> reduced_words_up_to(int n_generators, int max_len) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len) {
    reduced_words_of_length(n_generators, len, [&](const Word& w) { out.push_back(w); });
  }
  return out;
}

}  // namespace fq
