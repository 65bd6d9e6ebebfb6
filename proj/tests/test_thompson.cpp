#include <doctest.h>

#include <random>

#include "plh/constructions.hpp"
#include "plh/suites.hpp"
#include "plh/thompson.hpp"

using namespace plh;

namespace {

MixedProduct mixed(const Map& m) {
  if (const auto* e = std::get_if<ETPL>(&m)) return *e;
  if (const auto* c = std::get_if<CompactifiedMap>(&m)) return *c;
  return MixedProduct(std::get<PiecewiseHomeo>(m));
}

const Hypothesis* find(const FCertificate& c, const std::string& name) {
  for (const auto& h : c.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

const SquareRootBundle& trivial_bundle() {
  static const SquareRootBundle b = build_square_root_of_F(ETPL::identity(), ETPL::identity());
  return b;
}

}  // namespace

TEST_CASE("check_two_chain examples") {
  Step2Pair fg = default_step2_pair();
  ChainData ch = check_two_chain(fg.f, fg.g);
  CHECK(ch.a == 0);
  CHECK(ch.b == 1);
  CHECK(ch.c == 2);
  CHECK(ch.d == 3);
  CHECK_THROWS_AS(check_two_chain(fg.f, fg.f), Error);
  ETPL left = ETPL::compact({{0, 0}, {Rat(1, 2), Rat(3, 4)}, {1, 1}});
  ETPL right = ETPL::compact({{2, 2}, {Rat(5, 2), Rat(11, 4)}, {3, 3}});
  CHECK_THROWS_AS(check_two_chain(left, right), Error);
  CHECK_THROWS_AS(check_two_chain(compose(left, right), fg.g), Error);
}

TEST_CASE("dyn criterion examples") {
  Step2Pair fg = default_step2_pair();
  ETPL f2 = power(fg.f, 2), g2 = power(fg.g, 2);
  CHECK(fg.f(1) == Rat(5, 4));
  CHECK(fg.f(Rat(5, 4)) == Rat(3, 2));
  CHECK(fg.g(Rat(3, 2)) == Rat(7, 4));
  CHECK(fg.g(Rat(7, 4)) == 2);
  CHECK(dyn_value(f2, g2) == 2);
  CHECK(check_dyn_criterion(f2, g2));
  CHECK(dyn_value(fg.f, fg.g) == Rat(3, 2));
  CHECK_FALSE(check_dyn_criterion(fg.f, fg.g));

  ETPL fast_f = ETPL::compact({{0, 0}, {1, Rat(15, 8)}, {2, 2}});
  ETPL fast_g = ETPL::compact({{1, 1}, {Rat(15, 8), Rat(5, 2)}, {3, 3}});
  CHECK(check_dyn_criterion(fast_f, fast_g));
  FCertificate c = check_dyn_certificate(fast_f, fast_g);
  CHECK(c.valid);
  CHECK(c.criterion == Criterion::dyn);

  FCertificate wrong_way = check_dyn_certificate(inverse(fast_f), inverse(fast_g));
  CHECK_FALSE(wrong_way.valid);
  REQUIRE(find(wrong_way, "f(x) >= x and g(x) >= x"));
  CHECK_FALSE(find(wrong_way, "f(x) >= x and g(x) >= x")->pass);
}

TEST_CASE("a passing dyn pair also satisfies the F relators") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    ETPL f = affine_conjugate(random_right_pusher(rng, 2), Affine::scaling(Rat(1, 2)));
    ETPL g = affine_conjugate(affine_conjugate(random_right_pusher(rng, 2), Affine::scaling(Rat(1, 2))),
                              Affine::translation(-1));
    if (!check_dyn_criterion(f, g)) continue;
    ++checked;
    FCertificate c = check_dyn_certificate(f, g);
    CHECK(c.valid);
    CHECK(c.relations.pass);
    CHECK(c.noncommutation_witness);
  }
  FCertificate sq = check_dyn_certificate(power(default_step2_pair().f, 2), power(default_step2_pair().g, 2));
  CHECK(sq.valid);
  CHECK(sq.relations.exact);
  MESSAGE("random dyn pairs checked: " << checked);
}

TEST_CASE("nested-left examples") {
  const SquareRootBundle& b = trivial_bundle();
  const Rat b1 = *SixteenPartition::J(1).hi, b2 = *SixteenPartition::J(5).hi;
  FCertificate ok = check_nested_left(mixed(b.p1), mixed(b.p2), 0, b1, b2);
  CHECK(ok.valid);
  CHECK(ok.criterion == Criterion::nested_left);

  FCertificate same = check_nested_left(mixed(b.p1), mixed(b.p1), 0, b1, b2);
  CHECK_FALSE(same.valid);

  // One extra breakpoint inside [0, p1(b1)] breaks the agreement hypothesis.
  REQUIRE(std::holds_alternative<ETPL>(b.p2));
  ETPL bump = ETPL::compact({{Rat(1, 4), Rat(1, 4)}, {Rat(3, 8), Rat(5, 16)}, {Rat(1, 2), Rat(1, 2)}});
  ETPL p2 = compose(std::get<ETPL>(b.p2), bump);
  FCertificate broken = check_nested_left(mixed(b.p1), p2, 0, b1, b2);
  CHECK_FALSE(broken.valid);
  REQUIRE(find(broken, "agreement on [a,f(b1)]"));
  CHECK_FALSE(find(broken, "agreement on [a,f(b1)]")->pass);
}

TEST_CASE("nested-right examples") {
  const SquareRootBundle& b = trivial_bundle();
  const Rat a1 = *SixteenPartition::J(12).lo, a2 = *SixteenPartition::J(14).lo;
  CHECK(a2 == Rat(29, 16));
  CHECK(evaluate(b.q1, a2) == Rat(41, 20));
  FCertificate ok = check_nested_right(mixed(b.q1), mixed(b.q2), a1, a2, 3);
  CHECK(ok.valid);
  CHECK(ok.criterion == Criterion::nested_right);

  FCertificate idc = check_nested_right(ETPL::identity(), ETPL::identity(), a1, a2, 3);
  CHECK_FALSE(idc.valid);

  // x -> -x turns a valid nested-left pair into a valid nested-right one.
  ETPL p1 = std::get<ETPL>(b.p1), p2 = std::get<ETPL>(b.p2);
  const Rat b1 = *SixteenPartition::J(1).hi, b2 = *SixteenPartition::J(5).hi;
  FCertificate mirrored = check_nested_right(mirror(p1), mirror(p2), -b2, -b1, 0);
  CHECK(mirrored.valid);
}

TEST_CASE("certificate validity is invariant under affine conjugation") {
  const SquareRootBundle& b = trivial_bundle();
  ETPL p1 = std::get<ETPL>(b.p1), p2 = std::get<ETPL>(b.p2);
  const Rat b1 = *SixteenPartition::J(1).hi, b2 = *SixteenPartition::J(5).hi;
  for (const Affine& a : {Affine::translation(Rat(5, 7)), Affine::scaling(Rat(3, 2)), Affine{Rat(1, 3), Rat(-2)}}) {
    Affine ai = a.inverse();
    FCertificate c = check_nested_left(affine_conjugate(p1, a), affine_conjugate(p2, a), ai(0), ai(b1), ai(b2));
    CHECK(c.valid);
    ETPL f = affine_conjugate(power(default_step2_pair().f, 2), a);
    ETPL g = affine_conjugate(power(default_step2_pair().g, 2), a);
    CHECK(check_dyn_certificate(f, g).valid);
  }
}

TEST_CASE("standard F generators") {
  auto [a, b] = standard_F_generators(IntervalQ::open(0, 1));
  auto [x0, x1] = classic_F_pair();
  if (standard_F_uses_inverse()) {
    CHECK(a == inverse(x0));
    CHECK(b == inverse(x1));
  } else {
    CHECK(a == x0);
    CHECK(b == x1);
  }
  Presentation ab = builtin_presentation("F_ab");
  CheckReport r = check_presentation(ab, {{"a", a}, {"b", b}});
  CHECK(r.pass);
  CHECK_FALSE(r.commuting);

  auto [a6, b6] = standard_F_generators(SixteenPartition::J(6));
  CheckReport r6 = check_presentation(ab, {{"a", a6}, {"b", b6}});
  CHECK(r6.pass);
  CHECK_FALSE(r6.commuting);
  for (const auto& comp : support(a6)) CHECK(SixteenPartition::J(6).closure().contains(comp));

  FCertificate comm = certify_F_pair(a, a);
  CHECK_FALSE(comm.valid);
}

TEST_CASE("P realization") {
  Assignment p = P_realization(IntervalQ::open(0, 1), IntervalQ::open(2, 3));
  Presentation ab = builtin_presentation("F_ab");
  const IntervalQ left = IntervalQ::closed(0, 1), right = IntervalQ::closed(2, 3);
  auto restrict = [](const Map& m, const IntervalQ& j) { return Map(restrict_to(std::get<ETPL>(m), j)); };
  // Left side carries (p1, p2) = (a, b); the right side swaps the marking.
  CHECK(check_presentation(ab, {{"a", restrict(p.at("s"), left)}, {"b", restrict(p.at("t"), left)}}).pass);
  CHECK(check_presentation(ab, {{"a", restrict(p.at("t"), right)}, {"b", restrict(p.at("s"), right)}}).pass);
  CHECK_FALSE(is_identity(evaluate_word(parse_word("[s,t]"), p)));
  CHECK(is_identity(evaluate_word(builtin_word("w"), p)));
  CHECK_THROWS_AS(P_realization(IntervalQ::open(0, 2), IntervalQ::open(1, 3)), Error);
  CHECK_THROWS_AS(P_realization(IntervalQ::open(0, 1), IntervalQ::open(1, 3)), Error);
}

TEST_CASE("kernel membership") {
  CHECK(in_P_kernel(builtin_word("w")));
  CHECK(in_P_kernel(builtin_word("w_printed")));
  CHECK_FALSE(in_P_kernel(parse_word("s")));
  CHECK_FALSE(in_P_kernel(parse_word("[s,t]")));
  CHECK(in_P_kernel(Word()));
}

TEST_CASE("property: the kernel is closed under conjugation and products") {
  std::mt19937_64 rng(32);
  const Word w = builtin_word("w");
  for (int trial = 0; trial < 12; ++trial) {
    Word u = random_word(rng, {"s", "t"}, 4 + trial % 4);
    Word v = random_word(rng, {"s", "t"}, 3);
    Word conj = conjugate(w, u);
    CHECK(in_P_kernel(conj));
    CHECK(in_P_kernel(conj * conjugate(inverse(w), v)));
    if (!in_P_kernel(u)) CHECK_FALSE(in_P_kernel(conj * u));
  }
}

TEST_CASE("mirror") {
  ETPL f = default_step2_pair().f;
  ETPL m = mirror(f);
  for (int k = -20; k <= 20; ++k) {
    Rat x(k, 8);
    CHECK(m(x) == -f(-x));
  }
  CHECK(mirror(m) == f);
}
