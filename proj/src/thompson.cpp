#include "plh/thompson.hpp"

#include <algorithm>

namespace plh {

namespace {

IntervalQ single_component(const MixedProduct& f, const char* which) {
  auto comps = support(f);
  if (comps.size() != 1)
    throw Error(std::string("two-chain: support of ") + which + " has " + std::to_string(comps.size()) +
                " components, expected 1");
  if (!comps[0].bounded()) throw Error(std::string("two-chain: support of ") + which + " is unbounded");
  return comps[0];
}

bool pushes_right(const MixedProduct& f, const IntervalQ& comp) {
  Rat x = simplest_rational(comp);
  return f(x) > x;
}

std::vector<Rat> sample_points(const MixedProduct& f, const MixedProduct& g) {
  std::optional<Rat> lo, hi;
  for (const auto* m : {&f, &g})
    for (const auto& c : support(*m)) {
      Rat a = c.lo ? *c.lo : Rat(-8);
      Rat b = c.hi ? *c.hi : Rat(8);
      if (!lo || a < *lo) lo = a;
      if (!hi || b > *hi) hi = b;
    }
  std::vector<Rat> pts;
  if (!lo) return pts;
  const long n = 997;
  for (long k = 1; k < n; ++k) pts.push_back(*lo + (*hi - *lo) * Rat(k, n));
  for (long k = 1; k < 256; ++k) pts.push_back(*lo + (*hi - *lo) * Rat(k, 256));
  return pts;
}

// A point moved by m; exact when m lies in a closed class, otherwise searched
// among the samples.
std::optional<Rat> moved_point(const MixedProduct& m, const std::vector<Rat>& samples, bool& exact) {
  if (auto ef = exact_form(m)) return moved_witness(*ef);
  exact = false;
  for (const auto& x : samples)
    if (m(x) != x) return x;
  return std::nullopt;
}

bool agree_on_mixed(const MixedProduct& f, const MixedProduct& g, const IntervalQ& j) {
  auto ef = exact_form(f);
  auto eg = exact_form(g);
  if (!ef || !eg) throw Error("agreement: maps do not reduce to a closed class");
  return agree_on(*ef, *eg, j);
}

bool support_within(const MixedProduct& f, const IntervalQ& j) {
  for (const auto& c : support(f))
    if (!j.contains(c)) return false;
  return true;
}

std::string list_support(const MixedProduct& f) {
  std::string s;
  for (const auto& c : support(f)) s += (s.empty() ? "" : " ") + c.str();
  return s.empty() ? "empty" : s;
}

void finish(FCertificate& cert, const MixedProduct& f, const MixedProduct& g) {
  cert.relations = check_F_relations(f, g);
  bool exact = true;
  MixedProduct c = compose(compose(f, g), compose(inverse(f), inverse(g)));
  cert.noncommutation_witness = moved_point(c, sample_points(f, g), exact);
  cert.valid = cert.relations.pass && cert.noncommutation_witness.has_value() &&
               std::all_of(cert.hypotheses.begin(), cert.hypotheses.end(), [](const Hypothesis& h) { return h.pass; });
}

}  // namespace

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::dyn: return "dyn";
    case Criterion::nested_left: return "nestedL";
    case Criterion::nested_right: return "nestedR";
    case Criterion::relations_only: return "relations-only";
  }
  return "?";
}

ChainData check_two_chain(const MixedProduct& f, const MixedProduct& g) {
  IntervalQ sf = single_component(f, "f");
  IntervalQ sg = single_component(g, "g");
  if (sf == sg) throw Error("two-chain: the supports coincide");
  if (!(*sf.lo < *sg.lo && *sg.lo < *sf.hi && *sf.hi < *sg.hi)) {
    if (interiors_disjoint(sf, sg)) throw Error("two-chain: the supports are disjoint");
    throw Error("two-chain: supports " + sf.str() + " and " + sg.str() + " are nested or out of order");
  }
  return {*sf.lo, *sg.lo, *sf.hi, *sg.hi};
}

Rat dyn_value(const MixedProduct& f, const MixedProduct& g) {
  ChainData ch = check_two_chain(f, g);
  return g(f(ch.b));
}

bool check_dyn_criterion(const MixedProduct& f, const MixedProduct& g) {
  ChainData ch = check_two_chain(f, g);
  if (!pushes_right(f, IntervalQ::open(ch.a, ch.c)) || !pushes_right(g, IntervalQ::open(ch.b, ch.d)))
    throw Error("dyn criterion: f and g must push points right on their supports");
  return g(f(ch.b)) >= ch.c;
}

RelationCheck check_F_relations(const MixedProduct& f, const MixedProduct& g) {
  const std::vector<Rat> samples = sample_points(f, g);
  struct Marking {
    std::string name;
    MixedProduct x, y;
  };
  const std::vector<Marking> pairs{{"f g", f, g},
                                   {"f^-1 g^-1", inverse(f), inverse(g)},
                                   {"g f", g, f},
                                   {"g^-1 f^-1", inverse(g), inverse(f)}};
  RelationCheck first;
  bool have_first = false;
  for (const char* pname : {"F_ab", "F_AB"}) {
    const Presentation pres = builtin_presentation(pname);
    for (const auto& m : pairs) {
      RelationCheck rc;
      rc.marking = std::string(pname) + ": " + pres.generators[0] + "," + pres.generators[1] + " = " + m.name;
      rc.pass = true;
      MixedAssignment asg{{pres.generators[0], m.x}, {pres.generators[1], m.y}};
      for (const auto& r : pres.relators) {
        bool exact = true;
        RelatorCheck one{r, false, moved_point(evaluate_word_mixed(r, asg), samples, exact)};
        one.pass = !one.witness.has_value();
        rc.exact = rc.exact && exact;
        rc.pass = rc.pass && one.pass;
        rc.relators.push_back(std::move(one));
      }
      if (rc.pass) return rc;
      if (!have_first) {
        first = std::move(rc);
        have_first = true;
      }
    }
  }
  return first;
}

FCertificate certify_F_pair(const MixedProduct& f, const MixedProduct& g) {
  FCertificate cert;
  cert.criterion = Criterion::relations_only;
  finish(cert, f, g);
  return cert;
}

FCertificate check_dyn_certificate(const MixedProduct& f, const MixedProduct& g) {
  FCertificate cert;
  cert.criterion = Criterion::dyn;
  try {
    ChainData ch = check_two_chain(f, g);
    cert.hypotheses.push_back({"two-chain", true,
                               "supports (" + ch.a.str() + "," + ch.c.str() + ") and (" + ch.b.str() + "," +
                                   ch.d.str() + ")"});
    bool right = pushes_right(f, IntervalQ::open(ch.a, ch.c)) && pushes_right(g, IntervalQ::open(ch.b, ch.d));
    cert.hypotheses.push_back({"f(x) >= x and g(x) >= x", right, ""});
    Rat v = g(f(ch.b));
    cert.hypotheses.push_back({"g(f(b)) >= c", v >= ch.c, "g(f(" + ch.b.str() + ")) = " + v.str() + ", c = " + ch.c.str()});
  } catch (const Error& e) {
    cert.hypotheses.push_back({"two-chain", false, e.what()});
  }
  finish(cert, f, g);
  return cert;
}

FCertificate check_nested_left(const MixedProduct& f, const MixedProduct& g, const Rat& a, const Rat& b1,
                               const Rat& b2) {
  if (!(b1 < b2)) throw Error("nested-left: requires b1 < b2");
  FCertificate cert;
  cert.criterion = Criterion::nested_left;
  cert.hypotheses.push_back({"supp g in [a,b1]", support_within(g, IntervalQ::closed(a, b1)), list_support(g)});
  cert.hypotheses.push_back({"supp f in [a,b2]", support_within(f, IntervalQ::closed(a, b2)), list_support(f)});
  auto sf = support(f);
  bool decreasing = sf.size() == 1 && sf[0] == IntervalQ::open(a, b2) && !pushes_right(f, sf[0]);
  cert.hypotheses.push_back({"f decreasing on (a,b2)", decreasing, list_support(f)});
  Rat fb1 = f(b1);
  bool agree = fb1 > a && agree_on_mixed(f, g, IntervalQ::closed(a, fb1));
  cert.hypotheses.push_back({"agreement on [a,f(b1)]", agree, "f(b1) = " + fb1.str()});
  finish(cert, f, g);
  return cert;
}

FCertificate check_nested_right(const MixedProduct& f, const MixedProduct& g, const Rat& a1, const Rat& a2,
                                const Rat& b) {
  if (!(a1 < a2)) throw Error("nested-right: requires a1 < a2");
  FCertificate cert;
  cert.criterion = Criterion::nested_right;
  cert.hypotheses.push_back({"supp f in [a1,b]", support_within(f, IntervalQ::closed(a1, b)), list_support(f)});
  cert.hypotheses.push_back({"supp g in [a2,b]", support_within(g, IntervalQ::closed(a2, b)), list_support(g)});
  auto sf = support(f);
  bool increasing = sf.size() == 1 && sf[0] == IntervalQ::open(a1, b) && pushes_right(f, sf[0]);
  cert.hypotheses.push_back({"f increasing on (a1,b)", increasing, list_support(f)});
  Rat fa2 = f(a2);
  bool agree = fa2 < b && agree_on_mixed(f, g, IntervalQ::closed(fa2, b));
  cert.hypotheses.push_back({"agreement on [f(a2),b]", agree, "f(a2) = " + fa2.str()});
  finish(cert, f, g);
  return cert;
}

std::pair<ETPL, ETPL> classic_F_pair() {
  ETPL x0 = ETPL::compact({{0, 0}, {Rat(1, 2), Rat(1, 4)}, {Rat(3, 4), Rat(1, 2)}, {1, 1}});
  ETPL x1 = ETPL::compact({{0, 0}, {Rat(1, 2), Rat(1, 2)}, {Rat(3, 4), Rat(5, 8)}, {Rat(7, 8), Rat(3, 4)}, {1, 1}});
  return {x0, x1};
}

namespace {

bool passes_F_ab(const ETPL& a, const ETPL& b) {
  CheckReport r = check_presentation(builtin_presentation("F_ab"), {{"a", a}, {"b", b}});
  return r.pass && !r.commuting;
}

bool decide_orientation() {
  auto [x0, x1] = classic_F_pair();
  if (passes_F_ab(x0, x1)) return false;
  if (passes_F_ab(inverse(x0), inverse(x1))) return true;
  throw Error("standard_F_generators: neither orientation of the classic pair satisfies the a,b presentation");
}

}  // namespace

bool standard_F_uses_inverse() {
  static const bool inv = decide_orientation();
  return inv;
}

std::pair<ETPL, ETPL> standard_F_generators(const IntervalQ& j) {
  if (!j.bounded()) throw Error("standard_F_generators: interval must be bounded");
  auto [a, b] = classic_F_pair();
  if (standard_F_uses_inverse()) {
    a = inverse(a);
    b = inverse(b);
  }
  Affine to_unit = Affine::between(*j.lo, *j.hi, Rat(0), Rat(1));
  return {affine_conjugate(a, to_unit), affine_conjugate(b, to_unit)};
}

Assignment P_realization(const IntervalQ& left, const IntervalQ& right) {
  if (!interiors_disjoint(left, right) || left.closure().intersects(right.closure()))
    throw Error("P_realization: the intervals must have disjoint closures");
  auto [p1, p2] = standard_F_generators(left);
  auto [q1, q2] = standard_F_generators(right);
  return {{"s", compose(p1, q2)}, {"t", compose(p2, q1)}};
}

bool in_P_kernel(const Word& w) {
  static const Assignment real = P_realization(IntervalQ::open(0, 1), IntervalQ::open(2, 3));
  return is_identity(evaluate_word(w, real));
}

ETPL mirror(const ETPL& f) {
  std::vector<Point> pts;
  for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) pts.push_back({-it->x, -it->y});
  return canonicalize(ETPL(std::move(pts), -f.right_offset(), -f.left_offset()));
}

}  // namespace plh
