#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "plh/artifacts.hpp"
#include "plh/hallneumann.hpp"
#include "plh/suites.hpp"

using namespace plh;

namespace {

oracle::Mat mat_pow(const oracle::Mat& m, const oracle::Mat& mi, long e) {
  oracle::Mat r = oracle::Mat::id();
  for (long k = 0; k < std::abs(e); ++k) r = r * (e > 0 ? m : mi);
  return r;
}

oracle::Mat u_mat(long k) {
  using oracle::s_mat;
  return s_mat(0) * s_mat(k) * s_mat(0, -1) * s_mat(k, -1);
}

/// The matrix of a normal form, built factor by factor.
oracle::Mat to_mat(const HNElement& x) {
  oracle::Mat r = mat_pow(oracle::t_mat(1), oracle::t_mat(-1), x.m);
  for (const auto& [i, e] : x.e) r = r * mat_pow(oracle::s_mat(i), oracle::s_mat(i, -1), e);
  for (const auto& [k, c] : x.c) r = r * mat_pow(u_mat(k), u_mat(-k), c);
  return r;
}

std::vector<oracle::Letter> letters(const Word& w) {
  std::vector<oracle::Letter> out;
  for (const auto& s : w.syllables()) {
    auto g = oracle::gen(s.gen, static_cast<int>(s.exp));
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

HNElement random_element(std::mt19937_64& rng, int len = 12) {
  return hn_reduce_word(random_word(rng, {"s", "t"}, len));
}

Word s_word(long i) { return hn_s_word(i); }

}  // namespace

TEST_CASE("matrix model sanity") {
  using oracle::s_mat;
  using oracle::t_mat;
  CHECK(s_mat(3) * s_mat(3, -1) == oracle::Mat::id());
  CHECK(t_mat(-1) * s_mat(2) * t_mat(1) == s_mat(3));
  CHECK(u_mat(1) * s_mat(5) == s_mat(5) * u_mat(1));
  CHECK(u_mat(-2) * u_mat(2) == oracle::Mat::id());
  CHECK_FALSE(u_mat(1) == oracle::Mat::id());
}

TEST_CASE("multiplication examples") {
  HNElement v = hn_multiply(hn_t(2), hn_s(-1, 3));
  CHECK(hn_multiply(hn_identity(), v) == v);
  HNElement s0s1 = hn_multiply(hn_s(0), hn_s(1));
  HNElement s1s0 = hn_multiply(hn_s(1), hn_s(0));
  CHECK(s0s1.c.empty());
  CHECK(s1s0.e == s0s1.e);
  CHECK(s1s0.c == std::map<long, long>{{1, -1}});
  CHECK(to_mat(s1s0) == oracle::s_mat(1) * oracle::s_mat(0));
  CHECK(hn_multiply(hn_multiply(hn_t(-1), hn_s(0)), hn_t(1)) == hn_s(1));
  CHECK(hn_u(-3, 2) == hn_u(3, -2));
  CHECK(hn_u(0, 5) == hn_identity());
}

TEST_CASE("word reduction examples") {
  CHECK(hn_is_identity(hn_reduce_word(parse_word("[[s, t^-1 s t], s]"))));
  CHECK(hn_is_identity(hn_reduce_word(parse_word("[s, t^-1 s t] (t^-1 [s, t^-1 s t] t)^-1"))));
  HNElement u1 = hn_reduce_word(parse_word("[s, t^-1 s t]"));
  CHECK(u1 == hn_u(1));
  CHECK(hn_is_identity(hn_reduce_word(parse_word("[s, t^-1 s t]"), HNContext::finite({1}))));
  CHECK_FALSE(hn_is_identity(u1));
  CHECK_THROWS_AS(hn_reduce_word(parse_word("s x")), Error);
}

TEST_CASE("skew image examples") {
  CHECK(hn_skew_image(hn_t()) == hn_t(-1));
  CHECK(hn_skew_image(hn_s(0)) == hn_s(0, -1));
  HNElement img = hn_skew_image(hn_u(1));
  CHECK(img.m == 0);
  CHECK(img.e.empty());
  CHECK(img == hn_reduce_word(parse_word("[s^-1, t s^-1 t^-1]")));
  CHECK(img == hn_u(1, -1));
  HNContext x = HNContext::finite({2, 5});
  for (long k = 1; k <= 6; ++k) {
    HNElement c = hn_project(hn_u(k, 3), x);
    HNElement ic = hn_skew_image(c, x);
    CHECK(ic.m == 0);
    CHECK(ic.e.empty());
  }
}

TEST_CASE("property: normal forms match the matrix model") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, {"s", "t"}, 4 + trial % 20);
    HNElement x = hn_reduce_word(w);
    CHECK(to_mat(x) == oracle::eval(letters(w)));
    CHECK(hn_is_identity(x) == (oracle::eval(letters(w)) == oracle::Mat::id()));
  }
}

TEST_CASE("property: group axioms") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    HNElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(hn_multiply(hn_multiply(a, b), c) == hn_multiply(a, hn_multiply(b, c)));
    CHECK(hn_is_identity(hn_multiply(a, hn_inverse(a))));
    CHECK(hn_is_identity(hn_multiply(hn_inverse(a), a)));
    CHECK(to_mat(hn_multiply(a, b)) == to_mat(a) * to_mat(b));
  }
}

TEST_CASE("property: u_k is central") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    HNElement z = hn_u(1 + trial % 7, trial % 3 - 1);
    z = hn_multiply(z, hn_u(2 + trial % 5, 2));
    HNElement g = random_element(rng);
    CHECK(hn_multiply(z, g) == hn_multiply(g, z));
  }
}

TEST_CASE("property: conjugation by t shifts indices") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    HNElement g = random_element(rng);
    HNElement conj = hn_multiply(hn_multiply(hn_t(-1), g), hn_t(1));
    CHECK(conj.m == g.m);
    CHECK(conj.c == g.c);
    std::map<long, long> shifted;
    for (const auto& [i, e] : g.e) shifted[i + 1] = e;
    CHECK(conj.e == shifted);
  }
}

TEST_CASE("relator schemas over the index window") {
  for (long i = -8; i <= 8; ++i)
    for (long j = -8; j <= 8; ++j) {
      Word sij = commutator(s_word(i), s_word(j));
      for (long k = -8; k <= 8; ++k) {
        REQUIRE(hn_is_identity(hn_reduce_word(commutator(sij, s_word(k)))));
        Word shifted = commutator(s_word(i + k), s_word(j + k));
        REQUIRE(hn_is_identity(hn_reduce_word(sij * inverse(shifted))));
      }
    }
}

TEST_CASE("property: the skew map is an involutive automorphism") {
  std::mt19937_64 rng(55);
  Substitution skew{{"t", Word::gen("t", -1)}, {"s", Word::gen("s", -1)}};
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, {"s", "t"}, 14);
    HNElement x = hn_reduce_word(w);
    CHECK(hn_skew_image(hn_skew_image(x)) == x);
    CHECK(hn_skew_image(x) == hn_reduce_word(substitute(w, skew)));
    HNElement y = random_element(rng);
    CHECK(hn_skew_image(hn_multiply(x, y)) == hn_multiply(hn_skew_image(x), hn_skew_image(y)));
  }
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j)
      for (long k = -3; k <= 3; ++k) {
        Word r = commutator(commutator(s_word(i), s_word(j)), s_word(k));
        CHECK(hn_is_identity(hn_skew_image(hn_reduce_word(r))));
      }
}

TEST_CASE("property: abelianization is (m, sum of e)") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, {"s", "t"}, 16);
    HNElement x = hn_reduce_word(w);
    long sum = 0;
    for (const auto& [i, e] : x.e) sum += e;
    CHECK(abelianize(w, {"s", "t"}) == std::vector<long>{sum, x.m});
  }
}

TEST_CASE("property: quotients are projections") {
  std::mt19937_64 rng(57);
  std::vector<HNContext> contexts{HNContext::finite({1}), HNContext::finite({2, 3, 7}),
                                  HNContext::cofinite_except({1, 4}), HNContext::cofinite_except({})};
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, {"s", "t"}, 16);
    for (const auto& ctx : contexts) {
      HNElement q = hn_reduce_word(w, ctx);
      CHECK(q == hn_project(hn_reduce_word(w), ctx));
      for (const auto& [k, c] : q.c) CHECK_FALSE(ctx.contains(k));
    }
  }
  CHECK(HNContext::cofinite_except({1, 4}).contains(2));
  CHECK_FALSE(HNContext::cofinite_except({1, 4}).contains(4));
  CHECK_FALSE(HNContext::gamma().contains(1));
  CHECK(hn_is_identity(hn_u(5, 2), HNContext::cofinite_except({1})));
  CHECK_FALSE(hn_is_identity(hn_u(1, 2), HNContext::cofinite_except({1})));
}

TEST_CASE("format and parse") {
  CHECK(hn_format(hn_identity()) == "1");
  HNElement x = hn_multiply(hn_multiply(hn_t(-2), hn_s(-1, 3)), hn_multiply(hn_s(4, -1), hn_u(2, 5)));
  CHECK(hn_format(x) == "t^-2 · s_{-1}^3 · s_{4}^-1 · u_{2}^5");
  CHECK(hn_parse(hn_format(x)) == x);
  CHECK(hn_parse("t^-2 * s_-1^3 * s_4^-1 * u_2^5") == x);
  CHECK(hn_parse("s_{0}") == hn_s(0));
  CHECK(hn_parse("1") == hn_identity());
  CHECK_THROWS_AS(hn_parse("t^"), Error);
  CHECK_THROWS_AS(hn_parse("v_{1}"), Error);
  std::mt19937_64 rng(58);
  for (int trial = 0; trial < 100; ++trial) {
    HNElement y = random_element(rng, 20);
    CHECK(hn_parse(hn_format(y)) == y);
    CHECK(hn_from_json(Json::parse(to_json(y).dump())) == y);
  }
}

TEST_CASE("hn suite") { CHECK(all_pass(hn_suite(8, 1))); }
