#include "plh/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace plh {

Word::Word(std::vector<Syllable> syllables) : syl_(free_reduce(syllables).syl_) {}

long Word::length() const {
  long n = 0;
  for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

Word free_reduce(const std::vector<Syllable>& syllables) {
  std::vector<Syllable> stack;
  for (const auto& s : syllables) {
    if (s.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  Word w;
  w.syl_ = std::move(stack);
  return w;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Syllable> all = u.syllables();
  all.insert(all.end(), v.syllables().begin(), v.syllables().end());
  return free_reduce(all);
}

Word inverse(const Word& w) {
  std::vector<Syllable> out;
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) out.push_back({it->gen, -it->exp});
  return free_reduce(out);
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
  return out;
}

Word commutator(const Word& u, const Word& v) { return u * v * inverse(u) * inverse(v); }

Word conjugate(const Word& w, const Word& u) { return inverse(u) * w * u; }

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '[' || c == '1';
  }

  Word expr() {
    if (!at_atom_start()) {
      if (pos_ >= s_.size()) fail("unexpected end of input");
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    Word w = term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        if (!at_atom_start()) fail("expected a factor after '*'");
      } else if (!at_atom_start()) {
        return w;
      }
      w = w * term();
    }
  }

  Word term() {
    Word w = atom();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '^') return w;
      ++pos_;
      w = power(w, integer());
    }
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<long>::max() - 9) / 10) fail("exponent too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    return neg ? -v : v;
  }

  Word atom() {
    skip();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = expr();
      expect(',');
      Word v = expr();
      expect(']');
      return commutator(u, v);
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) fail("unknown token after '1'");
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return Word::gen(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

Word substitute(const Word& w, const Substitution& s) {
  Word out;
  for (const auto& syl : w.syllables()) {
    auto it = s.find(syl.gen);
    out = out * (it == s.end() ? Word::gen(syl.gen, syl.exp) : power(it->second, syl.exp));
  }
  return out;
}

std::vector<long> abelianize(const Word& w, const std::vector<std::string>& alphabet) {
  std::vector<long> out(alphabet.size(), 0);
  for (const auto& syl : w.syllables()) {
    auto it = std::find(alphabet.begin(), alphabet.end(), syl.gen);
    if (it == alphabet.end()) throw Error("abelianize: generator '" + syl.gen + "' not in the alphabet");
    out[static_cast<std::size_t>(it - alphabet.begin())] += syl.exp;
  }
  return out;
}

std::vector<std::string> generators_of(const Word& w) {
  std::vector<std::string> out;
  for (const auto& syl : w.syllables())
    if (std::find(out.begin(), out.end(), syl.gen) == out.end()) out.push_back(syl.gen);
  return out;
}

}  // namespace plh
