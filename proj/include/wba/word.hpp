#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wba {

// Parameters of the algebra: wall between strand r and strand r+1,
// generator indices 1..r+s-1, the wall generator has index r.
struct Context {
  int r = 1;
  int s = 1;

  Context() = default;
  Context(int r_, int s_) : r(r_), s(s_) {
    if (r < 1 || s < 1) throw std::invalid_argument("Context: need r >= 1 and s >= 1");
  }

  int strands() const { return r + s; }
  int max_gen() const { return r + s - 1; }
  int wall() const { return r; }
  bool valid_gen(int i) const { return i >= 1 && i <= max_gen(); }
};

// A word in the free monoid on generators s_1..s_{r+s-1}.  Letters are the
// 1-based generator indices; the empty word is the unit.  Immutable value
// semantics: all operations return fresh words.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  int operator[](std::size_t i) const { return letters[i]; }

  friend Word operator*(const Word& a, const Word& b) {
    Word out;
    out.letters.reserve(a.letters.size() + b.letters.size());
    out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// A word together with an accumulated power of the central element delta.
struct ScaledWord {
  long delta_exp = 0;
  Word word;

  bool operator==(const ScaledWord&) const = default;
};

// The descending run [p,q] = s_p s_{p-1} ... s_q; [q-1,q] is the empty word.
// p < q-1 is rejected.
Word make_run(int p, int q, const Context& ctx);

struct LengthStats {
  std::size_t len = 0;    // |w|
  std::size_t count_r = 0;     // occurrences of the wall generator
  std::size_t count_left = 0;  // letters with index < r
  std::size_t count_right = 0; // letters with index > r

  bool operator==(const LengthStats&) const = default;
};

LengthStats length_stats(const Word& w, const Context& ctx);

bool valid_word(const Word& w, const Context& ctx);
void check_word(const Word& w, const Context& ctx);

// Textual grammar: word := "e" | token (" " token)*, token := "s" <decimal>.
// Canonical formatting uses single spaces and no surrounding whitespace.
struct WordParseError : std::runtime_error {
  std::size_t position;
  WordParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

Word parse_word(const std::string& text, const Context& ctx);
std::string format_word(const Word& w);

}  // namespace wba
