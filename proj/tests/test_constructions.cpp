#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "plh/artifacts.hpp"
#include "plh/constructions.hpp"
#include "plh/suites.hpp"
#include "plh/thompson.hpp"

using namespace plh;

namespace {

IntervalQ J(int i) { return SixteenPartition::J(i); }

std::vector<Rat> points_in(const IntervalQ& j, long den = 40) {
  std::vector<Rat> out;
  for (const auto& x : oracle::grid(*j.lo, *j.hi, den))
    if (j.contains(x)) out.push_back(x);
  return out;
}

const SquareRootBundle& P_bundle() {
  static const SquareRootBundle b = squeezed_P_bundle();
  return b;
}

}  // namespace

TEST_CASE("sixteen partition") {
  CHECK(J(1) == IntervalQ::half_open(1, Rat(17, 16)));
  CHECK(J(16) == IntervalQ::half_open(Rat(31, 16), 2));
  CHECK(SixteenPartition::J_union({2, 3, 4, 7}) ==
        std::vector<IntervalQ>{IntervalQ::half_open(Rat(17, 16), Rat(20, 16)), J(7)});
  CHECK_THROWS_AS(J(0), Error);
  CHECK_THROWS_AS(J(17), Error);
}

TEST_CASE("default step-2 pair") {
  Step2Pair fg = default_step2_pair();
  CHECK(fg.f(Rat(27, 16)) == Rat(31, 16));
  // Isometric J_i -> J_{i+4} for i = 1..11.
  for (int i = 1; i <= 11; ++i)
    for (const auto& x : points_in(J(i))) REQUIRE(fg.f(x) == x + Rat(1, 4));
  for (int i = 2; i <= 11; ++i)
    for (const auto& x : points_in(J(i))) REQUIRE(fg.g(x) == x + Rat(1, 4));

  // Identity locus of g f^-1 in [1,2], from the affine pieces.
  ETPL gfi = compose(fg.g, inverse(fg.f));
  CHECK(agree_on(fg.f, fg.g, IntervalQ::closed(Rat(17, 16), Rat(27, 16))));
  for (const auto& x : oracle::grid(1, 2, 64)) {
    bool fixed = gfi(x) == x;
    CHECK(fixed == (Rat(17, 16) <= x && x <= Rat(27, 16)));
  }

  CHECK(fg.g.slope_right(1) == 5);
  CHECK(fg.g.slope_left(Rat(17, 16)) == 5);
  for (const auto& x : points_in(J(1).interior(), 64)) CHECK(fg.g(x) < x + Rat(1, 4));

  Step2Report r = verify_step2(fg.f, fg.g);
  CHECK(r.pass);
  REQUIRE(r.conditions.size() == 4);
  CHECK(r.conditions[3].name == "Step 2 (4)");
  CHECK(r.gf_inverse_support == std::vector<IntervalQ>{IntervalQ::open(0, Rat(17, 16)), IntervalQ::open(Rat(27, 16), 3)});
}

TEST_CASE("step-2 verifier names the violated condition") {
  Step2Pair fg = default_step2_pair();
  ETPL broken = ETPL::compact({{0, 0}, {1, Rat(5, 4)}, {Rat(55, 32), Rat(63, 32)}, {2, 2}});
  Step2Report r = verify_step2(broken, fg.g);
  CHECK_FALSE(r.pass);
  CHECK(r.failures().find("Step 2 (4)") != std::string::npos);
  ETPL not_isometric = ETPL::compact({{0, 0}, {1, Rat(5, 4)}, {Rat(3, 2), Rat(29, 16)}, {2, 2}});
  CHECK_FALSE(verify_step2(not_isometric, fg.g).pass);
}

TEST_CASE("square root of F with trivial inputs") {
  SquareRootBundle b = build_square_root_of_F(ETPL::identity(), ETPL::identity());
  CHECK(b.valid);
  Step2Pair fg = default_step2_pair();
  auto l1 = exact_form(b.lambda1), l2 = exact_form(b.lambda2);
  REQUIRE(l1);
  REQUIRE(l2);
  CHECK(equals(*l1, fg.f));
  CHECK(equals(*l2, fg.g));
  MixedProduct l1sq = power(b.lambda1, 2), l2sq = power(b.lambda2, 2);
  CHECK(dyn_value(l1sq, l2sq) == 2);
  CHECK(b.squares.valid);
  CHECK(b.squares.criterion == Criterion::dyn);
}

TEST_CASE("square root of F with the squeezed P realization") {
  const SquareRootBundle& b = P_bundle();
  CHECK(b.valid);
  CHECK(all_pass(b.checks));
  auto [s, t] = squeezed_P_pair(J(6));
  CHECK(std::get<ETPL>(b.h1) == s);
  CHECK(std::get<ETPL>(b.h2) == t);
  // h3 = f^-1 h2 f is h2 moved right by 1/4.
  for (const auto& x : points_in(J(10), 96)) CHECK(evaluate(to_map(b.h3), x) == t(x - Rat(1, 4)) + Rat(1, 4));

  MixedProduct l2l1 = compose(b.lambda2, inverse(b.lambda1));
  for (const auto& x : points_in(J(6), 96)) CHECK(l2l1(x) == s(x));
  MixedProduct l1l2 = compose(inverse(b.lambda1), b.lambda2);
  for (const auto& x : points_in(J(6), 96)) CHECK(l1l2(x) == x);

  CHECK(dyn_value(power(b.lambda1, 2), power(b.lambda2, 2)) == 2);
  CHECK(b.squares.valid);
  CHECK(b.squares.relations.pass);

  // Outer components and four regions.
  const auto& sup = b.support_l2_l1inv;
  REQUIRE(sup.size() >= 4);
  CHECK(sup.front() == IntervalQ::open(0, Rat(17, 16)));
  CHECK(sup.back() == IntervalQ::open(Rat(27, 16), 3));
  for (std::size_t i = 1; i + 1 < sup.size(); ++i)
    CHECK((J(6).closure().contains(sup[i]) || J(10).closure().contains(sup[i])));
  const auto& sup2 = b.support_l1inv_l2;
  CHECK(sup2.front() == IntervalQ::open(0, Rat(21, 16)));
  CHECK(sup2.back() == IntervalQ::open(Rat(31, 16), 3));
}

TEST_CASE("square root builder rejects leaking inputs") {
  ETPL leaky = ETPL::compact({{Rat(21, 16), Rat(21, 16)}, {Rat(22, 16), Rat(23, 16)}, {Rat(24, 16), Rat(24, 16)}});
  CHECK_THROWS_AS(build_square_root_of_F(leaky, ETPL::identity()), Error);
  CompactifiedMap wrong = compactify(ETPL::translation(1), J(7));
  CHECK_THROWS_AS(build_square_root_of_F(wrong, ETPL::identity()), Error);
}

TEST_CASE("mainsub certificate") {
  const SquareRootBundle& b = P_bundle();
  MainsubCertificate c = certify_mainsub(b);
  CHECK(c.valid);
  CHECK(c.rows.size() == 10);
  CHECK(all_pass(c.rows));
  CHECK(c.nested_left.valid);
  CHECK(c.nested_right.valid);
  Step2Pair fg = default_step2_pair();
  CHECK(inverse(fg.f)(Rat(17, 16)) == Rat(17, 20));
  CHECK(evaluate(b.p1, Rat(17, 16)) == Rat(17, 20));
  CHECK(fg.g(Rat(29, 16)) == Rat(41, 20));
  CHECK(evaluate(b.q1, Rat(29, 16)) == Rat(41, 20));
  for (const auto& x : oracle::grid(0, 1, 30)) {
    CHECK(evaluate(b.p1, x) == fg.f.preimage(x));
    CHECK(evaluate(b.p2, x) == fg.f.preimage(x));
  }
  for (const auto& x : oracle::grid(2, 3, 30)) {
    CHECK(evaluate(b.q1, x) == fg.g(x));
    CHECK(evaluate(b.q2, x) == fg.g(x));
  }
}

TEST_CASE("square root bundles with compactified inputs") {
  std::mt19937_64 rng(41);
  CompactifiedMap h1 = compactify(ETPL::translation(1), J(6));
  CompactifiedMap h2 = compactify(random_unit_map(rng, 3), J(6));
  SquareRootBundle b = build_square_root_of_F(h1, h2);
  CHECK(b.valid);
  CHECK(certify_mainsub(b).valid);
  MixedProduct l2l1 = compose(b.lambda2, inverse(b.lambda1));
  for (const auto& x : points_in(J(6), 50)) CHECK(l2l1(x) == h1(x));
}

TEST_CASE("bundle serialization round trip") {
  const SquareRootBundle& b = P_bundle();
  Json j = make_artifact("bundle", to_json(b));
  SquareRootBundle back = square_root_bundle_from_json(artifact_payload(Json::parse(j.dump()), "bundle"));
  CHECK(back.valid);
  CHECK(to_json(back).dump() == to_json(b).dump());
  Json tampered = to_json(b);
  tampered["lambda1"] = to_json(MixedProduct(ETPL::identity()));
  CHECK_THROWS_AS(square_root_bundle_from_json(tampered), Error);
}

TEST_CASE("kappa_y with trivial inputs") {
  ETPL id = ETPL::identity();
  EquationBundle e = kappa_y(id, id, id, id);
  CHECK(e.valid);
  CHECK(e.psi.is_identity());
  CHECK(e.phi.is_identity());
  CHECK(e.kappa.is_identity());
  CHECK(std::get<ETPL>(evaluate_word(builtin_word("w"), {{"s", e.tau}, {"t", e.y}})).is_identity());
}

TEST_CASE("kappa_y on random inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    ETPL mu = random_unit_map(rng, 3), nu = random_unit_map(rng, 3);
    ETPL chi = random_unit_map(rng, 3), xi = random_unit_map(rng, 3);
    EquationBundle e = kappa_y(mu, nu, chi, xi);
    CHECK(e.valid);
    CHECK(e.actions.size() == 14);
    CHECK(all_pass(e.actions));
    CHECK(e.tau == ETPL::translation(1));
    CHECK(equals(evaluate_word(builtin_word("w"), {{"s", e.tau}, {"t", e.y}}), e.kappa));
    for (const auto& comp : support(e.kappa))
      CHECK((IntervalQ::closed(2, 3).contains(comp) || IntervalQ::closed(102, 103).contains(comp)));
    // kappa acts by [mu, nu^-1] on [2,3].
    ETPL psi = compose(compose(compose(mu, inverse(nu)), inverse(mu)), nu);
    for (const auto& x : oracle::grid(2, 3, 12)) CHECK(e.kappa(x) == psi(x - 2) + 2);
  }
}

TEST_CASE("the printed w2 fails the equation") {
  std::mt19937_64 rng(43);
  EquationBundle e = kappa_y(random_unit_map(rng, 3), random_unit_map(rng, 3), random_unit_map(rng, 3),
                             random_unit_map(rng, 3));
  REQUIRE_FALSE(e.kappa.is_identity());
  CHECK_FALSE(equals(evaluate_word(builtin_word("w_printed"), {{"s", e.tau}, {"t", e.y}}), e.kappa));
}

TEST_CASE("uncountable pipeline") {
  ETPL id = ETPL::identity();
  UncountableBundle triv = uncountable_pipeline(id, id, id, id);
  CHECK(triv.valid);
  CHECK(support(triv.k2).empty());

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 3; ++trial) {
    ETPL mu = random_unit_map(rng, 3), nu = random_unit_map(rng, 3);
    ETPL chi = random_unit_map(rng, 3), xi = random_unit_map(rng, 3);
    UncountableBundle u = uncountable_pipeline(mu, nu, chi, xi);
    CHECK(u.valid);
    for (const auto& comp : support(u.k2)) CHECK(J(10).interior().contains(comp));
    CompactifiedMap kappa10 = compactify(u.equation.kappa, J(10));
    CompactifiedMap tau10 = compactify(u.equation.tau, J(10));
    for (const auto& x : points_in(J(10), 40)) {
      CHECK(u.k2(x) == kappa10(x));
      CHECK(u.k1(x) == tau10(x));
    }
    for (const auto& x : points_in(J(6), 40)) CHECK(u.k1(x) == x);
    Step2Pair fg = default_step2_pair();
    ETPL fig = compose(inverse(fg.f), fg.g);
    for (const auto& x : oracle::grid(Rat(-1, 2), Rat(7, 2), 24)) {
      if (J(6).contains(x) || J(10).contains(x) || J(14).contains(x)) continue;
      CHECK(u.k1(x) == fig(x));
    }
  }
}

TEST_CASE("skew roots of the translation") {
  SkewRootBundle triv = skew_root_of_translation({ETPL::identity()});
  CHECK(triv.valid);
  CHECK(triv.T[0] == PeriodicPL::translation(1, Rat(1, 2)));
  CHECK(equals(triv.S[0], PeriodicPL::identity(1)));

  ETPL h = ETPL::compact({{0, 0}, {Rat(1, 2), Rat(3, 4)}, {1, 1}});
  SkewRootBundle one = skew_root_of_translation({h});
  CHECK(one.valid);
  CHECK(power(one.T[0], 2) == PeriodicPL::translation(1, 1));
  CHECK(one.T.back() == PeriodicPL::translation(1, Rat(1, 2)));
  ETPL ht = one.h_tilde[0];
  for (const auto& x : oracle::grid(-1, 2, 24)) {
    Rat frac = x - from_integer(x.floor());
    Rat k = from_integer(x.floor());
    Rat expected = frac <= Rat(1, 2) ? inverse(ht)(frac) + k : ht(frac - Rat(1, 2)) + Rat(1, 2) + k;
    CHECK(one.S[0](x) == expected);
  }

  ETPL h2 = ETPL::compact({{0, 0}, {Rat(1, 2), Rat(5, 8)}, {1, 1}});
  SkewRootBundle other = skew_root_of_translation({h2});
  CHECK(other.S[0](Rat(3, 8)) != one.S[0](Rat(3, 8)));
}

TEST_CASE("property: skew products respect words") {
  std::mt19937_64 rng(45);
  for (int n = 1; n <= 3; ++n) {
    std::vector<ETPL> hs;
    for (int i = 0; i < n; ++i) hs.push_back(random_unit_map(rng, 2));
    SkewRootBundle b = skew_root_of_translation(hs);
    CHECK(b.valid);
    for (int i = 0; i < n; ++i) CHECK(equals(power(b.T[i], 2), PeriodicPL::translation(1, 1)));
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("S" + std::to_string(i));
    for (int k = 0; k < 4; ++k) CHECK(skew_product_row(b, random_word(rng, gens, 6)).pass);
  }
}

TEST_CASE("lamplighter roots") {
  LamplighterBundle triv = lamplighter_root(ETPL::identity(), ETPL::identity());
  CHECK(triv.valid);
  CHECK(triv.psi.is_identity());

  std::mt19937_64 rng(46);
  LamplighterBundle b = lamplighter_root(random_unit_map(rng, 3), random_unit_map(rng, 3));
  CHECK(b.valid);
  CHECK(b.psi(Rat(1, 2)) == Rat(1, 2));
  CHECK(power(b.T, 2) == ETPL::translation(1));
  ETPL psi2 = power(b.psi, 2);
  const ETPL tau = ETPL::translation(1);
  for (long k = -5; k <= 5; ++k)
    for (long j = k + 1; j <= 5; ++j) {
      ETPL a = compose(compose(power(tau, -k), psi2), power(tau, k));
      ETPL c = compose(compose(power(tau, -j), psi2), power(tau, j));
      for (const auto& p : support(a))
        for (const auto& q : support(c)) CHECK(interiors_disjoint(p, q));
      CHECK(compose(compose(a, c), inverse(compose(c, a))).is_identity());
    }
  for (const auto& x : oracle::grid(0, Rat(1, 2), 20)) CHECK(b.psi(x) == b.g1(2 * x) / 2);
}

TEST_CASE("property: roots reproduce the base") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    ETPL base = random_right_pusher(rng, 2);
    int n = 2 + trial % 3;
    Rat anchor(1, 2);
    RootPL g1 = random_root(rng, base, n, anchor), g2 = random_root(rng, base, n, anchor);
    CHECK(std::get<ETPL>(power(Map(g1), n)) == base);
    for (const auto& x : oracle::grid(Rat(-1, 4), Rat(5, 4), 24)) {
      Rat y = x;
      for (int i = 0; i < n; ++i) y = g1(y);
      CHECK(y == base(x));
      CHECK(g1.preimage(g1(x)) == x);
    }
    if (!(g1 == g2)) {
      bool differ = false;
      for (const auto& x : oracle::grid(anchor, base(anchor), 64)) differ = differ || g1(x) != g2(x);
      CHECK(differ);
    }
  }
}

TEST_CASE("componentwise roots") {
  ETPL two = compose(ETPL::compact({{0, 0}, {Rat(1, 2), Rat(3, 4)}, {1, 1}}),
                     inverse(ETPL::compact({{2, 2}, {Rat(5, 2), Rat(11, 4)}, {3, 3}})));
  ComponentwiseRoot r = nth_root_componentwise(two, 3);
  CHECK(r.roots.size() == 2);
  CHECK(r.inverted == std::vector<bool>{false, true});
  for (const auto& x : oracle::grid(Rat(-1, 2), Rat(7, 2), 20)) CHECK(r(r(r(x))) == two(x));
}
