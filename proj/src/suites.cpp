#include "plh/suites.hpp"

#include <set>

#include "plh/hallneumann.hpp"
#include "plh/artifacts.hpp"

namespace plh {

namespace {

Row row(std::string name, bool pass, std::string detail = "") { return {std::move(name), pass, std::move(detail), {}}; }

std::vector<Row> relator_rows(const CheckReport& rep, const std::string& prefix) {
  std::vector<Row> out;
  for (const auto& r : rep.relators) out.push_back({prefix + r.relator.str(), r.pass, "", r.witness});
  return out;
}

std::string failed_names(const std::vector<Row>& rows) {
  std::string s;
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.pass) {
      s += (s.empty() ? "" : ", ") + r.name;
      ++n;
    }
  if (n == 0) return "all " + std::to_string(rows.size()) + " rows pass";
  return std::to_string(n) + " failed: " + s;
}

void append(std::vector<Row>& to, const std::vector<Row>& rows, const std::string& prefix = "") {
  for (auto r : rows) {
    r.name = prefix + r.name;
    to.push_back(std::move(r));
  }
}

std::vector<long> distinct_sorted(std::mt19937_64& rng, int k, long lo, long hi) {
  std::set<long> s;
  std::uniform_int_distribution<long> d(lo, hi);
  while (static_cast<int>(s.size()) < k) s.insert(d(rng));
  return {s.begin(), s.end()};
}

Rat random_rational(std::mt19937_64& rng, const Rat& lo, const Rat& hi) {
  long q = std::uniform_int_distribution<long>(1, 997)(rng);
  long p = std::uniform_int_distribution<long>(1, q)(rng);
  return lo + (hi - lo) * Rat(p, q + 1);
}

}  // namespace

std::vector<Row> f_relator_suite() {
  std::vector<Row> rows;
  auto [a, b] = standard_F_generators(IntervalQ::open(0, 1));
  Assignment asg{{"a", a}, {"b", b}};
  rows.push_back(row("generators on (0,1)", true,
                     standard_F_uses_inverse() ? "inverses of the classic pair" : "the classic pair"));
  CheckReport ab = check_presentation(builtin_presentation("F_ab"), asg);
  append(rows, relator_rows(ab, "F_ab relator "));
  rows.push_back(row("[a, b] != id", !ab.commuting));

  Presentation big = builtin_presentation("F_AB");
  std::vector<Word> moved;
  for (const auto& r : big.relators) moved.push_back(substitute(r, tietze_AB_to_ab()));
  CheckReport AB = check_presentation(Presentation({"a", "b"}, moved), asg);
  append(rows, relator_rows(AB, "F_AB relator via A = a b^-1: "));
  return rows;
}

std::vector<Row> step2_suite(const Step2Pair& fg) {
  Step2Report rep = verify_step2(fg.f, fg.g);
  std::vector<Row> rows = rep.conditions;
  const std::vector<IntervalQ> expected{IntervalQ::open(0, Rat(17, 16)), IntervalQ::open(Rat(27, 16), 3)};
  std::string got;
  for (const auto& c : rep.gf_inverse_support) got += (got.empty() ? "" : " ") + c.str();
  rows.push_back(row("supp g f^-1 = (0,17/16) u (27/16,3)", rep.gf_inverse_support == expected, got));
  return rows;
}

SquareRootBundle squeezed_P_bundle() {
  auto [s, t] = squeezed_P_pair(SixteenPartition::J(6));
  return build_square_root_of_F(Letter(s), Letter(t));
}

std::vector<Row> dyn_suite(const SquareRootBundle& b) {
  std::vector<Row> rows;
  const MixedProduct f2 = power(b.lambda1, 2), g2 = power(b.lambda2, 2);
  Rat v = dyn_value(f2, g2);
  rows.push_back(row("g^2(f^2(1)) = 2", v == 2, "value " + v.str()));
  rows.push_back(row("dyn criterion holds for (l1^2, l2^2)", check_dyn_criterion(f2, g2)));
  append(rows, certificate_rows(b.squares), "squares: ");
  rows.push_back(row("squares certificate valid", b.squares.valid, b.squares.relations.marking));
  return rows;
}

std::vector<Row> nested_suite(const SquareRootBundle& b) {
  MainsubCertificate c = certify_mainsub(b);
  std::vector<Row> rows;
  append(rows, certificate_rows(c.nested_left), "left (p1, p2): ");
  rows.push_back(row("left certificate valid", c.nested_left.valid, c.nested_left.relations.marking));
  append(rows, certificate_rows(c.nested_right), "right (q1, q2): ");
  rows.push_back(row("right certificate valid", c.nested_right.valid, c.nested_right.relations.marking));
  return rows;
}

std::vector<Row> mainsub_suite(const SquareRootBundle& b) { return certify_mainsub(b).rows; }

ETPL random_right_pusher(std::mt19937_64& rng, int k, long denominator) {
  auto z = distinct_sorted(rng, 2 * k, 1, denominator - 1);
  std::vector<Point> pts{{0, 0}};
  for (int i = 0; i < k; ++i) pts.push_back({Rat(z[2 * i], denominator), Rat(z[2 * i + 1], denominator)});
  pts.push_back({1, 1});
  return canonicalize(ETPL::compact(std::move(pts)));
}

RootPL random_root(std::mt19937_64& rng, const ETPL& base, int n, const Rat& anchor) {
  const Rat end = base(anchor);
  std::vector<Rat> div{anchor};
  for (long r : distinct_sorted(rng, n - 1, 1, 63)) div.push_back(anchor + (end - anchor) * Rat(r, 64));
  div.push_back(end);
  std::vector<std::vector<Point>> pieces;
  std::uniform_int_distribution<long> d(1, 63);
  for (int m = 0; m + 1 < n; ++m) {
    Rat x = div[m] + (div[m + 1] - div[m]) * Rat(d(rng), 64);
    Rat y = div[m + 1] + (div[m + 2] - div[m + 1]) * Rat(d(rng), 64);
    pieces.push_back({{div[m], div[m + 1]}, {x, y}, {div[m + 1], div[m + 2]}});
  }
  return nth_root(base, n, anchor, std::move(div), std::move(pieces));
}

Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int length) {
  std::vector<Syllable> syl;
  std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) syl.push_back({gens[g(rng)], sign(rng) ? 1L : -1L});
  return free_reduce(syl);
}

std::vector<Row> equation_suite(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  for (int i = 0; i < trials; ++i) {
    ETPL mu = random_unit_map(rng, 3), nu = random_unit_map(rng, 3);
    ETPL chi = random_unit_map(rng, 3), xi = random_unit_map(rng, 3);
    EquationBundle b = kappa_y(mu, nu, chi, xi);
    std::vector<Row> all = b.actions;
    append(all, b.identities);
    rows.push_back(row("trial " + std::to_string(i + 1), b.valid && b.actions.size() == 14, failed_names(all)));
  }
  return rows;
}

std::vector<Row> root_suite(std::uint64_t seed, int trials, int samples) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  for (int i = 0; i < trials; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const ETPL base = random_right_pusher(rng, std::uniform_int_distribution<int>(1, 3)(rng));
    const Rat anchor = random_rational(rng, Rat(1, 8), Rat(7, 8));
    const RootPL g = random_root(rng, base, n, anchor);
    const RootPL a = nth_root_affine(base, n, anchor);
    std::string detail = "n = " + std::to_string(n) + ", anchor " + anchor.str();
    std::vector<std::string> bad;

    const IntervalQ fund = IntervalQ::closed(anchor, base(anchor));
    if (!agree_on(power(g.window(0, 1), n), base, fund)) bad.push_back("g^n != base on the fundamental domain");
    if (!agree_on(power(a.window(0, 1), n), base, fund)) bad.push_back("affine choice: g^n != base");

    for (int k = 0; k < samples && bad.size() < 3; ++k) {
      Rat x = random_rational(rng, Rat(-1, 4), Rat(5, 4));
      Rat y = x;
      for (int m = 0; m < n; ++m) y = g(y);
      if (y != base(x)) bad.push_back("g^n(" + x.str() + ") = " + y.str());
    }

    std::optional<Rat> witness;
    std::vector<Rat> probes;
    for (const auto& p : g.fundamental().breakpoints()) probes.push_back(p.x);
    for (const auto& p : a.fundamental().breakpoints()) probes.push_back(p.x);
    for (const auto& x : probes)
      if (fund.contains(x) && g(x) != a(x)) {
        witness = x;
        break;
      }
    if (!witness) bad.push_back("two choices coincide");
    else detail += ", choices differ at " + witness->str();

    for (const auto& s : bad) detail += "; " + s;
    rows.push_back({"trial " + std::to_string(i + 1), bad.empty(), detail, witness});
  }
  return rows;
}

std::vector<Row> uncountable_suite(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  for (int i = 0; i < trials; ++i) {
    ETPL mu = random_unit_map(rng, 3), nu = random_unit_map(rng, 3);
    ETPL chi = random_unit_map(rng, 3), xi = random_unit_map(rng, 3);
    UncountableBundle b = uncountable_pipeline(mu, nu, chi, xi);
    rows.push_back(row("trial " + std::to_string(i + 1), b.valid, failed_names(b.rows)));
  }
  return rows;
}

std::vector<Row> kernel_suite() {
  const Word w = builtin_word("w");
  const Word s = Word::gen("s"), t = Word::gen("t");
  std::vector<Row> rows;
  rows.push_back(row("free_reduce(w) is nonempty", !free_reduce(w.syllables()).empty(),
                     "length " + std::to_string(w.length())));
  rows.push_back(row("w in ker(F2 -> P)", in_P_kernel(w)));
  rows.push_back(row("s not in ker(F2 -> P)", !in_P_kernel(s)));
  rows.push_back(row("[s, t] not in ker(F2 -> P)", !in_P_kernel(commutator(s, t))));
  return rows;
}

std::vector<Row> skew_root_suite(std::uint64_t seed, int max_n, int words) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<ETPL> h;
    for (int i = 0; i < n; ++i) h.push_back(random_unit_map(rng, 2));
    SkewRootBundle b = skew_root_of_translation(h);
    const std::string p = "n = " + std::to_string(n) + ": ";
    append(rows, b.rows, p);
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("S" + std::to_string(i));
    for (int k = 0; k < words; ++k) {
      Row r = skew_product_row(b, random_word(rng, gens, 6));
      r.name = p + r.name;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<Row> lamplighter_suite(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  for (int i = 0; i < trials; ++i) {
    LamplighterBundle b = lamplighter_root(random_unit_map(rng, 3), random_unit_map(rng, 3));
    append(rows, b.rows, "trial " + std::to_string(i + 1) + ": ");
  }
  return rows;
}

std::vector<Row> hn_suite(long window, std::uint64_t seed) {
  std::vector<Row> rows;
  const Substitution skew{{"t", Word::gen("t", -1)}, {"s", Word::gen("s", -1)}};
  long nested = 0, shift = 0, skewed = 0, involution = 0, total = 0;
  std::string first_bad;
  for (long i = -window; i <= window; ++i)
    for (long j = -window; j <= window; ++j)
      for (long k = -window; k <= window; ++k) {
        const Word si = hn_s_word(i), sj = hn_s_word(j), sk = hn_s_word(k);
        const Word r1 = commutator(commutator(si, sj), sk);
        const Word r2 = commutator(si, sj) * inverse(commutator(hn_s_word(i + k), hn_s_word(j + k)));
        ++total;
        bool ok1 = hn_is_identity(hn_reduce_word(r1)), ok2 = hn_is_identity(hn_reduce_word(r2));
        nested += ok1;
        shift += ok2;
        bool ok3 = hn_is_identity(hn_reduce_word(substitute(r1, skew))) &&
                   hn_is_identity(hn_reduce_word(substitute(r2, skew)));
        skewed += ok3;
        if (first_bad.empty() && !(ok1 && ok2 && ok3))
          first_bad = "i, j, k = " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k);
        const HNElement x = hn_reduce_word(commutator(si, sj) * sk * Word::gen("t", i - k));
        involution += hn_skew_image(hn_skew_image(x)) == x;
      }
  auto count = [&](long c) { return std::to_string(c) + "/" + std::to_string(total) + (first_bad.empty() ? "" : "; first failure at " + first_bad); };
  rows.push_back(row("[[s_i, s_j], s_k] = 1", nested == total, count(nested)));
  rows.push_back(row("[s_i, s_j] = [s_{i+k}, s_{j+k}]", shift == total, count(shift)));
  rows.push_back(row("skew map sends relator instances to 1", skewed == total, count(skewed)));
  rows.push_back(row("skew map is an involution", involution == total, count(involution)));

  std::mt19937_64 rng(seed);
  bool hom = true;
  for (int n = 0; n < 200 && hom; ++n) {
    Word w = random_word(rng, {"s", "t"}, 12);
    hom = hn_skew_image(hn_reduce_word(w)) == hn_reduce_word(substitute(w, skew));
  }
  rows.push_back(row("skew image agrees with t -> t^-1, s -> s^-1 on 200 words", hom));

  const Word u1 = commutator(Word::gen("s"), hn_s_word(1));
  const HNElement g1 = hn_reduce_word(u1);
  rows.push_back(row("u_1 != 1 in Gamma", !hn_is_identity(g1), hn_format(g1)));
  rows.push_back(row("u_1 = 1 in N_{1}", hn_is_identity(hn_reduce_word(u1, HNContext::finite({1})))));
  bool ab = true;
  for (int n = 0; n < 200 && ab; ++n) {
    Word w = random_word(rng, {"s", "t"}, 12);
    HNElement x = hn_reduce_word(w);
    long sum = 0;
    for (const auto& [i, e] : x.e) sum += e;
    ab = abelianize(w, {"t", "s"}) == std::vector<long>{x.m, sum};
  }
  rows.push_back(row("(m, sum e) is the abelianization on 200 words", ab));
  return rows;
}

}  // namespace plh
