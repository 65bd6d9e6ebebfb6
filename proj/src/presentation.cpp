#include "plh/presentation.hpp"

#include <algorithm>
#include <tuple>

namespace plh {

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)), relators(std::move(rels)) {
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (std::find(generators.begin(), generators.end(), s.gen) == generators.end())
        throw Error("presentation: relator " + r.str() + " uses undeclared generator '" + s.gen + "'");
}

Map evaluate_word(const Word& w, const Assignment& a) {
  Map out = identity_map();
  for (const auto& s : w.syllables()) {
    auto it = a.find(s.gen);
    if (it == a.end()) throw Error("unbound generator '" + s.gen + "'");
    out = compose(out, power(it->second, s.exp));
  }
  return out;
}

MixedProduct evaluate_word_mixed(const Word& w, const MixedAssignment& a) {
  MixedProduct out;
  for (const auto& s : w.syllables()) {
    auto it = a.find(s.gen);
    if (it == a.end()) throw Error("unbound generator '" + s.gen + "'");
    out = compose(out, power(it->second, s.exp));
  }
  return out;
}

namespace {

void add_candidates(const Map& f, std::vector<Rat>& out) {
  if (const auto* e = std::get_if<ETPL>(&f)) {
    for (const auto& p : e->breakpoints()) out.push_back(p.x);
  } else if (const auto* p = std::get_if<PeriodicPL>(&f)) {
    for (const auto& b : p->breakpoints()) out.push_back(b.x);
  } else if (const auto* r = std::get_if<RootPL>(&f)) {
    for (const auto& d : r->divisions()) out.push_back(d);
  } else if (const auto* c = std::get_if<CompactifiedMap>(&f)) {
    Compactifier rho(c->target());
    for (const auto& b : c->inner().breakpoints()) out.push_back(rho.to_interval(b.x));
  } else {
    for (const auto& part : std::get<PiecewiseHomeo>(f).parts())
      add_candidates(std::visit([](const auto& m) -> Map { return m; }, part.rep), out);
  }
}

// Least-denominator rational strictly between lo and hi (either may be infinite).
Rat simplest_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  // Integers strictly inside.
  std::optional<mpz_class> first, last;
  if (lo) first = lo->floor() + 1;
  if (hi) {
    mpz_class h = hi->floor();
    last = from_integer(h) == *hi ? mpz_class(h - 1) : h;
  }
  if (!first || !last || *first <= *last) {
    if ((!first || *first <= 0) && (!last || *last >= 0)) return Rat(0);
    if (first && *first > 0) return from_integer(*first);
    return from_integer(*last);
  }
  // lo and hi share the integer part n, with n <= lo < hi <= n + 1.
  mpz_class n = lo->floor();
  Rat nr = from_integer(n);
  std::optional<Rat> ylo, yhi;
  ylo = Rat(1) / (*hi - nr);
  if (*lo != nr) yhi = Rat(1) / (*lo - nr);
  return nr + Rat(1) / simplest_between(ylo, yhi);
}

}  // namespace

Rat simplest_rational(const IntervalQ& j) { return simplest_between(j.lo, j.hi); }

std::optional<Rat> moved_witness(const Map& f) {
  std::vector<Rat> cand;
  add_candidates(f, cand);
  std::optional<Rat> best;
  auto key = [](const Rat& x) { return std::make_tuple(denominator_bits(x), abs(x), x); };
  for (const auto& x : cand)
    if (evaluate(f, x) != x && (!best || key(x) < key(*best))) best = x;
  if (best) return best;
  auto comps = support(f);
  if (comps.empty()) return std::nullopt;
  return simplest_rational(comps.front());
}

CheckReport check_presentation(const Presentation& p, const Assignment& a) {
  CheckReport rep;
  rep.pass = true;
  for (const auto& r : p.relators) {
    Map m = evaluate_word(r, a);
    RelatorCheck rc{r, false, moved_witness(m)};
    rc.pass = !rc.witness.has_value();
    rep.pass = rep.pass && rc.pass;
    rep.relators.push_back(std::move(rc));
  }
  rep.commuting = true;
  for (std::size_t i = 0; i < p.generators.size() && rep.commuting; ++i)
    for (std::size_t j = i + 1; j < p.generators.size() && rep.commuting; ++j) {
      Word c = commutator(Word::gen(p.generators[i]), Word::gen(p.generators[j]));
      if (!is_identity(evaluate_word(c, a))) rep.commuting = false;
    }
  return rep;
}

Word builtin_word(const std::string& name) {
  if (name == "w1") return parse_word("[s t^-1, s^-2 t s^2]");
  if (name == "w2") return parse_word("s [s t^-1, t^-1 s^-1 t] s^-1");
  if (name == "w2_printed") return parse_word("t [s t^-1, t^-1 s^-1 t] t^-1");
  if (name == "w") return commutator(builtin_word("w1"), builtin_word("w2"));
  if (name == "w_printed") return commutator(builtin_word("w1"), builtin_word("w2_printed"));
  throw Error("unknown builtin word '" + name + "'");
}

Presentation builtin_presentation(const std::string& name) {
  if (name == "F_AB")
    return {{"A", "B"}, {parse_word("[A, (A B)^-1 B (A B)]"), parse_word("[A, (A B)^-2 B (A B)^2]")}};
  if (name == "F_ab") return {{"a", "b"}, {parse_word("[a b^-1, a^-1 b a]"), parse_word("[a b^-1, a^-2 b a^2]")}};
  throw Error("unknown builtin presentation '" + name + "'");
}

Substitution tietze_AB_to_ab() { return {{"A", parse_word("a b^-1")}, {"B", parse_word("b")}}; }

std::variant<Word, Presentation, Substitution> builtin(const std::string& name) {
  if (name == "F_AB" || name == "F_ab") return builtin_presentation(name);
  if (name == "tietze_AB_to_ab") return tietze_AB_to_ab();
  return builtin_word(name);
}

FormalRoot formal_square_root(const Presentation& p) {
  FormalRoot out;
  std::vector<std::string> taken = p.generators;
  std::vector<std::string> roots;
  for (const auto& g : p.generators) {
    std::string cand = (!g.empty() && g[0] == 'x') ? "y" + g.substr(1) : "sqrt_" + g;
    std::string name = cand;
    for (int k = 2; std::find(taken.begin(), taken.end(), name) != taken.end(); ++k) name = cand + "_" + std::to_string(k);
    taken.push_back(name);
    roots.push_back(name);
    out.roots.emplace_back(name, g);
  }
  std::vector<std::string> gens = roots;
  gens.insert(gens.end(), p.generators.begin(), p.generators.end());
  std::vector<Word> rels = p.relators;
  for (std::size_t i = 0; i < roots.size(); ++i) rels.push_back(Word::gen(p.generators[i]) * Word::gen(roots[i], -2));
  for (const auto& r : p.relators)
    if (r.syllables().size() == 1 && (r.syllables().front().exp == 1 || r.syllables().front().exp == -1)) out.trivial_generators.push_back(r.syllables().front().gen);
  out.presentation = Presentation(std::move(gens), std::move(rels));
  return out;
}

}  // namespace plh
