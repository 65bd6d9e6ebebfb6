#include "plh/artifacts.hpp"

namespace plh {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("serialization: missing field '") + name + "'");
  return j.at(name);
}

Json map_list(const std::vector<ETPL>& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

Json interval_list(const std::vector<IntervalQ>& v) {
  Json out = Json::array();
  for (const auto& j : v) out.push_back(to_json(j));
  return out;
}

Json int_pairs(const std::map<long, long>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back(Json::array({k, v}));
  return out;
}

std::map<long, long> int_pairs_from(const Json& j) {
  std::map<long, long> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error("serialization: expected an [index, exponent] pair");
    long k = p[0].get<long>(), v = p[1].get<long>();
    if (v == 0) throw Error("serialization: zero exponent in normal form");
    if (!out.emplace(k, v).second) throw Error("serialization: repeated index " + std::to_string(k));
  }
  return out;
}

}  // namespace

Json to_json(const Word& w) { return w.str(); }

Word word_from_json(const Json& j) {
  if (!j.is_string()) throw Error("serialization: word must be a string");
  return parse_word(j.get<std::string>());
}

Json to_json(const Presentation& p) {
  Json rel = Json::array();
  for (const auto& r : p.relators) rel.push_back(to_json(r));
  return Json{{"generators", p.generators}, {"relators", rel}};
}

Presentation presentation_from_json(const Json& j) {
  std::vector<Word> rel;
  for (const auto& r : field(j, "relators")) rel.push_back(word_from_json(r));
  return Presentation(field(j, "generators").get<std::vector<std::string>>(), std::move(rel));
}

Json to_json(const HNElement& x) {
  return Json{{"m", x.m}, {"e", int_pairs(x.e)}, {"c", int_pairs(x.c)}, {"normal_form", hn_format(x)}};
}

HNElement hn_from_json(const Json& j) {
  HNElement x;
  x.m = field(j, "m").get<long>();
  x.e = int_pairs_from(field(j, "e"));
  x.c = int_pairs_from(field(j, "c"));
  for (const auto& [k, v] : x.c)
    if (k <= 0) throw Error("serialization: u-index must be positive, got " + std::to_string(k));
  return x;
}

Json to_json(const Row& r) {
  return Json{{"name", r.name},
              {"pass", r.pass},
              {"detail", r.detail},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Row row_from_json(const Json& j) {
  Row r{field(j, "name").get<std::string>(), field(j, "pass").get<bool>(), j.value("detail", ""), std::nullopt};
  if (j.contains("witness") && !j.at("witness").is_null()) r.witness = rat_from_json(j.at("witness"));
  return r;
}

Json to_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

std::vector<Row> rows_from_json(const Json& j) {
  std::vector<Row> out;
  for (const auto& r : j) out.push_back(row_from_json(r));
  return out;
}

Json to_json(const Letter& h) { return to_json(to_map(h)); }

Letter letter_from_json(const Json& j) {
  Map m = map_from_json(j);
  if (const auto* e = std::get_if<ETPL>(&m)) return *e;
  if (const auto* c = std::get_if<CompactifiedMap>(&m)) return *c;
  throw Error("serialization: a letter must be an ETPL or compactified map, got " + class_name(m));
}

Json to_json(const MixedProduct& m) {
  Json out = Json::array();
  for (const auto& h : m.letters()) out.push_back(to_json(h));
  return Json{{"letters", out}};
}

MixedProduct mixed_from_json(const Json& j) {
  std::vector<Letter> letters;
  for (const auto& h : field(j, "letters")) letters.push_back(letter_from_json(h));
  return MixedProduct(std::move(letters));
}

std::vector<Row> certificate_rows(const FCertificate& c) {
  std::vector<Row> rows;
  for (const auto& h : c.hypotheses) rows.push_back({h.name, h.pass, h.detail, std::nullopt});
  for (const auto& r : c.relations.relators)
    rows.push_back({"relator " + r.relator.str(), r.pass, c.relations.marking, r.witness});
  rows.push_back({"[f, g] != id", c.noncommutation_witness.has_value(),
                  c.noncommutation_witness ? "moves " + c.noncommutation_witness->str() : "", c.noncommutation_witness});
  return rows;
}

Json to_json(const FCertificate& c) {
  return Json{{"criterion", criterion_name(c.criterion)},
              {"rows", to_json(certificate_rows(c))},
              {"marking", c.relations.marking},
              {"exact", c.relations.exact},
              {"valid", c.valid}};
}

Json to_json(const Step2Report& r) {
  return Json{{"rows", to_json(r.conditions)}, {"gf_inverse_support", interval_list(r.gf_inverse_support)}, {"valid", r.pass}};
}

Json to_json(const SquareRootBundle& b) {
  return Json{{"construction", "square-root-of-f"},
              {"inputs", {{"f", to_json(b.f)}, {"g", to_json(b.g)}, {"h1", to_json(b.h1)}, {"h2", to_json(b.h2)}}},
              {"h3", to_json(b.h3)},
              {"lambda1", to_json(b.lambda1)},
              {"lambda2", to_json(b.lambda2)},
              {"p1", to_json(b.p1)},
              {"p2", to_json(b.p2)},
              {"q1", to_json(b.q1)},
              {"q2", to_json(b.q2)},
              {"support_l2_l1inv", interval_list(b.support_l2_l1inv)},
              {"support_l1inv_l2", interval_list(b.support_l1inv_l2)},
              {"squares", to_json(b.squares)},
              {"rows", to_json(b.checks)},
              {"valid", b.valid}};
}

SquareRootBundle square_root_bundle_from_json(const Json& j) {
  if (j.value("construction", "") != "square-root-of-f") throw Error("bundle: not a square-root-of-f bundle");
  const Json& in = field(j, "inputs");
  Step2Pair fg{etpl_from_json(field(in, "f")), etpl_from_json(field(in, "g"))};
  SquareRootBundle b = build_square_root_of_F(letter_from_json(field(in, "h1")), letter_from_json(field(in, "h2")), fg);
  auto same = [](const MixedProduct& a, const MixedProduct& c) { return to_json(a) == to_json(c); };
  if (j.contains("lambda1") && !same(mixed_from_json(j.at("lambda1")), b.lambda1))
    throw Error("bundle: stored lambda1 does not match its inputs");
  if (j.contains("lambda2") && !same(mixed_from_json(j.at("lambda2")), b.lambda2))
    throw Error("bundle: stored lambda2 does not match its inputs");
  return b;
}

Json to_json(const MainsubCertificate& c) {
  return Json{{"rows", to_json(c.rows)},
              {"nested_left", to_json(c.nested_left)},
              {"nested_right", to_json(c.nested_right)},
              {"valid", c.valid}};
}

Json to_json(const EquationBundle& b) {
  return Json{{"construction", "kappa-y"},
              {"inputs", {{"mu", to_json(b.mu)}, {"nu", to_json(b.nu)}, {"chi", to_json(b.chi)}, {"xi", to_json(b.xi)}}},
              {"tau", to_json(b.tau)},
              {"y", to_json(b.y)},
              {"psi", to_json(b.psi)},
              {"phi", to_json(b.phi)},
              {"kappa", to_json(b.kappa)},
              {"alpha", to_json(b.alpha)},
              {"beta", to_json(b.beta)},
              {"c", to_json(b.c)},
              {"actions", to_json(b.actions)},
              {"rows", to_json(b.identities)},
              {"valid", b.valid}};
}

Json to_json(const UncountableBundle& b) {
  return Json{{"construction", "uncountable"},
              {"equation", to_json(b.equation)},
              {"root", to_json(b.root)},
              {"k1", to_json(Map(b.k1))},
              {"k1_prime", to_json(Map(b.k1_prime))},
              {"k2", to_json(Map(b.k2))},
              {"rows", to_json(b.rows)},
              {"valid", b.valid}};
}

Json to_json(const SkewRootBundle& b) {
  Json t = Json::array(), s = Json::array();
  for (const auto& m : b.T) t.push_back(to_json(Map(m)));
  for (const auto& m : b.S) s.push_back(to_json(Map(m)));
  return Json{{"construction", "skew-root"},
              {"inputs", {{"h", map_list(b.h)}}},
              {"h_tilde", map_list(b.h_tilde)},
              {"T", t},
              {"S", s},
              {"rows", to_json(b.rows)},
              {"valid", b.valid}};
}

Json to_json(const LamplighterBundle& b) {
  return Json{{"construction", "lamplighter-root"},
              {"inputs", {{"g1", to_json(b.g1)}, {"g2", to_json(b.g2)}}},
              {"psi", to_json(b.psi)},
              {"T", to_json(b.T)},
              {"rows", to_json(b.rows)},
              {"valid", b.valid}};
}

}  // namespace plh
