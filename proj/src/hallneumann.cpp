#include "plh/hallneumann.hpp"

#include <cctype>

namespace plh {

namespace {

void add(std::map<long, long>& v, long k, long a) {
  if (a == 0) return;
  long& x = v[k];
  x += a;
  if (x == 0) v.erase(k);
}

void add_u(std::map<long, long>& c, long k, long a) {
  if (k == 0) return;
  if (k < 0) {
    k = -k;
    a = -a;
  }
  add(c, k, a);
}

}  // namespace

HNElement hn_identity() { return {}; }

HNElement hn_t(long m) { return {m, {}, {}}; }

HNElement hn_s(long i, long e) {
  HNElement x;
  add(x.e, i, e);
  return x;
}

HNElement hn_u(long k, long c) {
  HNElement x;
  add_u(x.c, k, c);
  return x;
}

HNElement hn_project(HNElement x, const HNContext& ctx) {
  for (auto it = x.c.begin(); it != x.c.end();)
    it = ctx.contains(it->first) ? x.c.erase(it) : std::next(it);
  return x;
}

HNElement hn_multiply(const HNElement& x, const HNElement& y, const HNContext& ctx) {
  // t^m S(e) U(c) t^m' S(e') U(c') = t^(m+m') S(e moved by m') S(e') U(c + c'),
  // then s_p^a s_q^b = u_{p-q}^{-ab} s_q^b s_p^a for p > q.
  HNElement out;
  out.m = x.m + y.m;
  out.c = x.c;
  for (const auto& [k, a] : y.c) add(out.c, k, a);
  for (const auto& [i, a] : x.e) {
    long p = i + y.m;
    for (const auto& [q, b] : y.e)
      if (p > q) add_u(out.c, p - q, -a * b);
    add(out.e, p, a);
  }
  for (const auto& [q, b] : y.e) add(out.e, q, b);
  return hn_project(std::move(out), ctx);
}

HNElement hn_inverse(const HNElement& x, const HNContext& ctx) {
  HNElement out;
  for (auto it = x.e.rbegin(); it != x.e.rend(); ++it) out = hn_multiply(out, hn_s(it->first, -it->second), ctx);
  out = hn_multiply(out, hn_t(-x.m), ctx);
  for (const auto& [k, a] : x.c) out = hn_multiply(out, hn_u(k, -a), ctx);
  return out;
}

bool hn_is_identity(const HNElement& x, const HNContext& ctx) { return hn_project(x, ctx) == HNElement{}; }

HNElement hn_reduce_word(const Word& w, const HNContext& ctx) {
  HNElement out;
  for (const auto& s : w.syllables()) {
    if (s.gen == "t")
      out = hn_multiply(out, hn_t(s.exp), ctx);
    else if (s.gen == "s")
      out = hn_multiply(out, hn_s(0, s.exp), ctx);
    else
      throw Error("Hall-Neumann words use only t and s, got '" + s.gen + "'");
  }
  return out;
}

HNElement hn_skew_image(const HNElement& x, const HNContext& ctx) {
  // t -> t^-1, s_i -> s_{-i}^-1, u_k -> u_k^-1.
  HNElement out = hn_t(-x.m);
  for (const auto& [i, a] : x.e) out = hn_multiply(out, hn_s(-i, -a), ctx);
  for (const auto& [k, a] : x.c) out = hn_multiply(out, hn_u(k, -a), ctx);
  return out;
}

std::string hn_format(const HNElement& x) {
  std::string s;
  auto put = [&](const std::string& f) { s += (s.empty() ? "" : " · ") + f; };
  if (x.m != 0) put("t^" + std::to_string(x.m));
  for (const auto& [i, a] : x.e) put("s_{" + std::to_string(i) + "}^" + std::to_string(a));
  for (const auto& [k, a] : x.c) put("u_{" + std::to_string(k) + "}^" + std::to_string(a));
  return s.empty() ? "1" : s;
}

namespace {

class HNParser {
public:
  explicit HNParser(std::string_view t) : text_(t) {}

  HNElement parse() {
    HNElement out;
    skip();
    if (eat("1")) {
      skip();
      if (pos_ != text_.size()) fail("trailing input");
      return out;
    }
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      if (!first && !eat("·") && !eat("*")) fail("expected '·' between factors");
      skip();
      factor(out);
      first = false;
    }
    if (first) fail("empty element");
    return out;
  }

private:
  void factor(HNElement& out) {
    if (pos_ >= text_.size()) fail("expected a factor");
    char g = text_[pos_++];
    if (g == 't') {
      out = hn_multiply(out, hn_t(exponent()));
      return;
    }
    if (g != 's' && g != 'u') fail(std::string("unknown factor '") + g + "'");
    if (!eat("_")) fail("expected '_'");
    long idx;
    if (eat("{")) {
      idx = integer();
      if (!eat("}")) fail("expected '}'");
    } else {
      idx = integer();
    }
    long e = exponent();
    out = hn_multiply(out, g == 's' ? hn_s(idx, e) : hn_u(idx, e));
  }

  long exponent() {
    if (!eat("^")) return 1;
    if (eat("{")) {
      long e = integer();
      if (!eat("}")) fail("expected '}'");
      return e;
    }
    return integer();
  }

  long integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  bool eat(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HNElement hn_parse(std::string_view text) { return HNParser(text).parse(); }

Word hn_s_word(long i) { return Word::gen("t", -i) * Word::gen("s") * Word::gen("t", i); }

}  // namespace plh
