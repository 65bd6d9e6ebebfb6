#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plh/error.hpp"

namespace plh {

struct Syllable {
  std::string gen;
  long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of a free group on named generators, as a list of syllables g^e.
/// Words built through the functions below are freely reduced: adjacent
/// syllables have different generators and no exponent is zero.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);
  static Word gen(const std::string& name, long exp = 1) { return Word({{name, exp}}); }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  /// Number of letters, counting g^e as |e| letters.
  long length() const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend Word free_reduce(const std::vector<Syllable>& syllables);

private:
  std::vector<Syllable> syl_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

Word free_reduce(const std::vector<Syllable>& syllables);
Word operator*(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, long n);
/// [u,v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);
/// u^-1 w u.
Word conjugate(const Word& w, const Word& u);

/// Grammar:
///   expr := term { ['*'] term }
///   term := atom { '^' integer }
///   atom := identifier | '1' | '(' expr ')' | '[' expr ',' expr ']'
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*. Juxtaposition multiplies left to right.
Word parse_word(std::string_view text);

using Substitution = std::map<std::string, Word>;
/// Replaces each generator by its image; generators without an image are kept.
Word substitute(const Word& w, const Substitution& s);

/// Exponent sums, in the order of `alphabet`.
std::vector<long> abelianize(const Word& w, const std::vector<std::string>& alphabet);
std::vector<std::string> generators_of(const Word& w);

}  // namespace plh
