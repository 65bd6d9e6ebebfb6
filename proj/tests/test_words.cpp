#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "plh/constructions.hpp"
#include "plh/suites.hpp"
#include "plh/thompson.hpp"

using namespace plh;

namespace {

std::vector<oracle::Letter> letters(const Word& w) {
  std::vector<oracle::Letter> out;
  for (const auto& s : w.syllables()) {
    auto g = oracle::gen(s.gen, static_cast<int>(s.exp));
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

/// Random unreduced letter string over the alphabet.
std::vector<oracle::Letter> random_letters(std::mt19937_64& rng, const std::vector<std::string>& gens, int n) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution sign;
  std::vector<oracle::Letter> w;
  for (int i = 0; i < n; ++i) w.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return w;
}

std::string render(const std::vector<oracle::Letter>& w) {
  std::string out;
  for (const auto& l : w) out += l.g + (l.sign < 0 ? "^-1 " : " ");
  return out.empty() ? "1" : out;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_word("a a^-1").empty());
  CHECK(parse_word("[a,b]") == parse_word("a b a^-1 b^-1"));
  CHECK(parse_word("[a,b]").str() == "a b a^-1 b^-1");
  Word w1 = parse_word("[s t^-1, s^-2 t s^2]");
  CHECK(w1.length() == 14);
  CHECK(w1 == parse_word("s t^-1 s^-2 t s^2 t s^-3 t^-1 s^2"));
  CHECK(w1 == builtin_word("w1"));
  CHECK(parse_word("(a b)^2 * 1") == parse_word("a b a b"));
  CHECK(parse_word("x_1^3 x_1^-3").empty());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("a ^"), ParseError);
  CHECK_THROWS_AS(parse_word("[a b]"), ParseError);
  CHECK_THROWS_AS(parse_word("a $ b"), ParseError);
  try {
    parse_word("ab (c");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce({{"a", 1}, {"b", 1}, {"b", -1}, {"a", 1}}) == Word::gen("a", 2));
  Word lhs = parse_word("[T Y^-1, Y^-1 T^-1 Y]");
  Word rhs = parse_word("[T, Y^-2] [T^-1, Y^-1]");
  CHECK(lhs == rhs);
  CHECK(oracle::reduce(letters(lhs)) == oracle::reduce(letters(rhs)));
  CHECK_FALSE(builtin_word("w").empty());
  CHECK_FALSE(oracle::reduce(letters(builtin_word("w"))).empty());
}

TEST_CASE("builtin words and presentations") {
  CHECK(builtin_word("w") == commutator(builtin_word("w1"), builtin_word("w2")));
  CHECK(builtin_word("w2") == parse_word("s [s t^-1, t^-1 s^-1 t] s^-1"));
  CHECK(builtin_word("w2_printed") == parse_word("t [s t^-1, t^-1 s^-1 t] t^-1"));
  Presentation ab = builtin_presentation("F_ab");
  CHECK(ab.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(ab.relators.size() == 2);
  CHECK(ab.relators[0] == parse_word("[a b^-1, a^-1 b a]"));
  CHECK(ab.relators[1] == parse_word("[a b^-1, a^-2 b a^2]"));
  Presentation AB = builtin_presentation("F_AB");
  CHECK(AB.relators[0] == parse_word("[A, (A B)^-1 B (A B)]"));
  CHECK(AB.relators[1] == parse_word("[A, (A B)^-2 B (A B)^2]"));
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK_THROWS_AS(Presentation({"a"}, {parse_word("a b")}), Error);
}

TEST_CASE("tietze rewriting of the A,B relators holds on the classic pair") {
  auto [a, b] = standard_F_generators(IntervalQ::open(0, 1));
  Assignment as{{"a", a}, {"b", b}};
  for (const auto& r : builtin_presentation("F_AB").relators) {
    Word rewritten = substitute(r, tietze_AB_to_ab());
    CHECK(generators_of(rewritten) == std::vector<std::string>{"a", "b"});
    CHECK(is_identity(evaluate_word(rewritten, as)));
  }
}

TEST_CASE("evaluate_word examples") {
  Step2Pair fg = default_step2_pair();
  Assignment as{{"f", fg.f}, {"g", fg.g}};
  CHECK(is_identity(evaluate_word(Word(), as)));
  Map m = evaluate_word(parse_word("g f^-1"), as);
  CHECK(support(m) == std::vector<IntervalQ>{IntervalQ::open(0, Rat(17, 16)), IntervalQ::open(Rat(27, 16), 3)});
  CHECK_THROWS_AS(evaluate_word(parse_word("h"), as), Error);

  std::mt19937_64 rng(5);
  EquationBundle eb = kappa_y(random_unit_map(rng, 3), random_unit_map(rng, 3), random_unit_map(rng, 3),
                              random_unit_map(rng, 3));
  Map k = evaluate_word(builtin_word("w"), {{"s", eb.tau}, {"t", eb.y}});
  CHECK(equals(k, eb.kappa));
}

TEST_CASE("abelianize examples") {
  CHECK(abelianize(parse_word("[a,b]"), {"a", "b"}) == std::vector<long>{0, 0});
  CHECK(abelianize(parse_word("a^2 b^-1"), {"a", "b"}) == std::vector<long>{2, -1});
  for (const auto& name : {"F_ab", "F_AB"}) {
    Presentation p = builtin_presentation(name);
    for (const auto& r : p.relators) CHECK(abelianize(r, p.generators) == std::vector<long>{0, 0});
  }
  CHECK(abelianize(builtin_word("w"), {"s", "t"}) == std::vector<long>{0, 0});
}

TEST_CASE("check_presentation examples") {
  Presentation ab = builtin_presentation("F_ab");
  auto [a, b] = standard_F_generators(IntervalQ::open(0, 1));
  CheckReport ok = check_presentation(ab, {{"a", a}, {"b", b}});
  CHECK(ok.pass);
  CHECK_FALSE(ok.commuting);

  CheckReport trivial = check_presentation(ab, {{"a", identity_map()}, {"b", identity_map()}});
  CHECK(trivial.pass);
  CHECK(trivial.commuting);

  ETPL x = ETPL::compact({{0, 0}, {Rat(1, 3), Rat(1, 2)}, {1, 1}});
  ETPL y = ETPL::compact({{Rat(1, 4), Rat(1, 4)}, {Rat(1, 2), Rat(7, 8)}, {Rat(3, 2), Rat(3, 2)}});
  CheckReport bad = check_presentation(ab, {{"a", x}, {"b", y}});
  CHECK_FALSE(bad.pass);
  bool witnessed = false;
  for (const auto& rc : bad.relators) {
    if (rc.pass) continue;
    REQUIRE(rc.witness);
    Map image = evaluate_word(rc.relator, {{"a", x}, {"b", y}});
    CHECK(evaluate(image, *rc.witness) != *rc.witness);
    witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("formal_square_root examples") {
  FormalRoot one = formal_square_root(Presentation({"x"}, {}));
  CHECK(one.presentation.generators.size() == 2);
  REQUIRE(one.presentation.relators.size() == 1);
  CHECK(one.presentation.relators[0].syllables().size() == 2);
  CHECK(abelianize(one.presentation.relators[0], one.presentation.generators).size() == 2);

  Presentation two({"x1", "x2"}, {parse_word("[x1, x2]")});
  FormalRoot r = formal_square_root(two);
  CHECK(r.presentation.generators.size() == 4);
  CHECK(r.presentation.relators.size() == 3);
  FormalRoot rr = formal_square_root(r.presentation);
  CHECK(rr.presentation.generators.size() == 8);
  CHECK(rr.presentation.relators.size() == 1 + 3 * 2);

  FormalRoot flagged = formal_square_root(Presentation({"x", "z"}, {parse_word("z")}));
  CHECK(flagged.trivial_generators == std::vector<std::string>{"z"});
}

TEST_CASE("property: reduction agrees with the stack reducer") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = random_letters(rng, {"a", "b", "c"}, 1 + trial % 25);
    Word w = parse_word(render(raw));
    CHECK(letters(w) == oracle::reduce(raw));
    CHECK(parse_word(w.str()) == w);
    CHECK(free_reduce(w.syllables()) == w);
    CHECK(inverse(w) * w == Word());
  }
}

TEST_CASE("property: commutator and conjugate conventions") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_letters(rng, {"a", "b"}, 6), v = random_letters(rng, {"a", "b"}, 5);
    Word U = parse_word(render(u)), V = parse_word(render(v));
    CHECK(letters(commutator(U, V)) == oracle::reduce(oracle::comm(u, v)));
    CHECK(letters(conjugate(U, V)) == oracle::reduce(oracle::cat(oracle::cat(oracle::inv(v), u), v)));
    CHECK(parse_word("[" + render(u) + "," + render(v) + "]") == commutator(U, V));
  }
}

TEST_CASE("property: evaluation is a homomorphism and ignores reduction") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Assignment as{{"a", random_unit_map(rng, 2)}, {"b", compose(random_unit_map(rng, 3), ETPL::translation(1))}};
    auto ru = random_letters(rng, {"a", "b"}, 8), rv = random_letters(rng, {"a", "b"}, 8);
    Word u = parse_word(render(ru)), v = parse_word(render(rv));
    CHECK(equals(evaluate_word(u * v, as), compose(evaluate_word(u, as), evaluate_word(v, as))));
    // Unreduced evaluation, one letter at a time.
    Map slow = identity_map();
    for (const auto& l : ru) slow = compose(slow, l.sign > 0 ? as.at(l.g) : inverse(as.at(l.g)));
    CHECK(equals(slow, evaluate_word(u, as)));
  }
}

TEST_CASE("property: abelianize is additive") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, {"a", "b", "c"}, 10), v = random_word(rng, {"a", "b", "c"}, 7);
    auto au = abelianize(u, {"a", "b", "c"}), av = abelianize(v, {"a", "b", "c"});
    auto auv = abelianize(u * v, {"a", "b", "c"});
    for (int i = 0; i < 3; ++i) CHECK(auv[i] == au[i] + av[i]);
    CHECK(abelianize(commutator(u, v), {"a", "b", "c"}) == std::vector<long>{0, 0, 0});
  }
}
