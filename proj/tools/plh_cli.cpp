#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>

#include "plh/artifacts.hpp"
#include "plh/suites.hpp"

using namespace plh;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : Error {
  using Error::Error;
};

template <class F>
auto as_usage(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Json read_payload(const std::string& path, const std::string& kind) {
  return as_usage(path, [&] { return artifact_payload(read_json_file(path), kind); });
}

Map load_map(const std::string& spec) {
  if (spec == "id") return identity_map();
  return as_usage(spec, [&] {
    Json j = read_json_file(spec);
    return j.contains("kind") ? map_from_json(artifact_payload(j, "map")) : map_from_json(j);
  });
}

ETPL load_etpl(const std::string& spec) {
  Map m = load_map(spec);
  if (const auto* e = std::get_if<ETPL>(&m)) return *e;
  throw UsageError(spec + ": expected an etpl map, got " + class_name(m));
}

Letter load_letter(const std::string& spec, const ETPL& squeezed) {
  if (spec == "P") return squeezed;
  Map m = load_map(spec);
  if (const auto* e = std::get_if<ETPL>(&m)) return *e;
  if (const auto* c = std::get_if<CompactifiedMap>(&m)) return *c;
  throw UsageError(spec + ": expected an etpl or compactified map, got " + class_name(m));
}

MixedProduct load_mixed(const std::string& spec) {
  Map m = load_map(spec);
  if (const auto* e = std::get_if<ETPL>(&m)) return *e;
  if (const auto* c = std::get_if<CompactifiedMap>(&m)) return *c;
  if (const auto* p = std::get_if<PiecewiseHomeo>(&m)) return MixedProduct(*p);
  throw UsageError(spec + ": " + class_name(m) + " maps cannot enter a certificate");
}

std::set<long> parse_index_set(const std::string& text) {
  std::set<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stol(item));
  return out;
}

void write_out(const std::string& path, const std::string& kind, Json payload) {
  if (!path.empty()) write_json_file(path, make_artifact(kind, std::move(payload)));
}

std::string failed(const std::vector<Row>& rows) {
  std::string s;
  for (const auto& r : rows)
    if (!r.pass) s += (s.empty() ? "" : ", ") + r.name;
  return s;
}

int report(const std::string& anchor, const std::vector<Row>& rows) {
  std::size_t pass = 0;
  std::cout << "certificate: " << anchor << "\n";
  for (const auto& r : rows) {
    pass += r.pass;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    if (!r.pass && r.witness) std::cout << "  witness " << r.witness->str();
    std::cout << "\n";
  }
  std::cout << pass << "/" << rows.size() << " pass\n";
  if (pass == rows.size()) return kPass;
  std::cerr << "verification failed: " << anchor << ": " << failed(rows) << "\n";
  return kFailed;
}

struct Options {
  std::string name;
  std::string out, out_f, out_g;
  std::string f, g, h1 = "id", h2 = "id";
  std::string mu, nu, chi, xi, g1, g2;
  std::vector<std::string> h;
  std::string bundle, presentation = "F_ab", word, X, X_cofinite;
  std::uint64_t seed = 1;
  int trials = -1, n = -1;
  long window = 8;
  std::string at;
  std::string map;
  std::vector<std::string> bind;
};

std::vector<ETPL> seeded_quadruple(const Options& o) {
  if (!o.mu.empty() || !o.nu.empty() || !o.chi.empty() || !o.xi.empty()) {
    if (o.mu.empty() || o.nu.empty() || o.chi.empty() || o.xi.empty())
      throw UsageError("give all of --mu, --nu, --chi, --xi or none");
    return {load_etpl(o.mu), load_etpl(o.nu), load_etpl(o.chi), load_etpl(o.xi)};
  }
  std::mt19937_64 rng(o.seed);
  std::vector<ETPL> v;
  for (int i = 0; i < 4; ++i) v.push_back(random_unit_map(rng, 3));
  return v;
}

Step2Pair step2_inputs(const Options& o) {
  Step2Pair fg = default_step2_pair();
  if (!o.f.empty()) fg.f = load_etpl(o.f);
  if (!o.g.empty()) fg.g = load_etpl(o.g);
  return fg;
}

int cmd_build(const Options& o) {
  if (o.name == "step2") {
    Step2Pair fg = step2_inputs(o);
    Step2Report rep = verify_step2(fg.f, fg.g);
    Json payload = to_json(rep);
    payload["construction"] = "step2";
    payload["f"] = to_json(fg.f);
    payload["g"] = to_json(fg.g);
    write_out(o.out, "bundle", payload);
    write_out(o.out_f, "map", to_json(fg.f));
    write_out(o.out_g, "map", to_json(fg.g));
    return report("Step 2", rep.conditions);
  }
  if (o.name == "square-root-of-f") {
    Step2Pair fg = step2_inputs(o);
    auto [s, t] = squeezed_P_pair(SixteenPartition::J(6));
    Letter h1 = load_letter(o.h1, s), h2 = load_letter(o.h2, t);
    SquareRootBundle b = build_square_root_of_F(h1, h2, fg);
    write_out(o.out, "bundle", to_json(b));
    std::vector<Row> rows = b.checks;
    for (auto r : certificate_rows(b.squares)) {
      r.name = "squares: " + r.name;
      rows.push_back(r);
    }
    return report("Prop. \"main\" (Lemma \"dyn criterion\" for the squares)", rows);
  }
  if (o.name == "kappa-y") {
    auto v = seeded_quadruple(o);
    EquationBundle b = kappa_y(v[0], v[1], v[2], v[3]);
    write_out(o.out, "bundle", to_json(b));
    std::vector<Row> rows = b.actions;
    rows.insert(rows.end(), b.identities.begin(), b.identities.end());
    return report("Lemma \"equation\"", rows);
  }
  if (o.name == "uncountable") {
    auto v = seeded_quadruple(o);
    UncountableBundle b = uncountable_pipeline(v[0], v[1], v[2], v[3]);
    write_out(o.out, "bundle", to_json(b));
    return report("Theorem \"uncountable\"", b.rows);
  }
  if (o.name == "skew-root") {
    std::vector<ETPL> h;
    for (const auto& file : o.h) h.push_back(load_etpl(file));
    if (h.empty()) {
      std::mt19937_64 rng(o.seed);
      for (int i = 0; i < (o.n > 0 ? o.n : 2); ++i) h.push_back(random_unit_map(rng, 2));
    }
    SkewRootBundle b = skew_root_of_translation(h);
    write_out(o.out, "bundle", to_json(b));
    return report("Theorem \"Z^n\"", b.rows);
  }
  if (o.name == "lamplighter-root") {
    std::mt19937_64 rng(o.seed);
    ETPL g1 = o.g1.empty() ? random_unit_map(rng, 3) : load_etpl(o.g1);
    ETPL g2 = o.g2.empty() ? random_unit_map(rng, 3) : load_etpl(o.g2);
    LamplighterBundle b = lamplighter_root(g1, g2);
    write_out(o.out, "bundle", to_json(b));
    return report("Theorem \"lamproot\"", b.rows);
  }
  if (o.name == "formal-sqrt") {
    Presentation p;
    if (o.presentation == "F_ab" || o.presentation == "F_AB")
      p = builtin_presentation(o.presentation);
    else
      p = as_usage(o.presentation, [&] { return presentation_from_json(read_payload(o.presentation, "presentation")); });
    FormalRoot r = formal_square_root(p);
    Json payload = to_json(r.presentation);
    payload["trivial_generators"] = r.trivial_generators;
    Json roots = Json::array();
    for (const auto& [y, x] : r.roots) roots.push_back(Json::array({y, x}));
    payload["roots"] = roots;
    write_out(o.out, "presentation", payload);
    std::vector<Row> rows;
    for (const auto& [y, x] : r.roots) {
      Word rel = Word::gen(x) * Word::gen(y, -2);
      bool has = std::find(r.presentation.relators.begin(), r.presentation.relators.end(), rel) !=
                 r.presentation.relators.end();
      rows.push_back({"relator " + rel.str(), has, "", {}});
    }
    for (const auto& w : r.presentation.relators) std::cout << w.str() << "\n";
    return report("formal square root", rows);
  }
  if (o.name == "hn") {
    if (o.word.empty()) throw UsageError("build hn needs --word");
    HNContext ctx;
    if (!o.X.empty()) ctx = HNContext::finite(parse_index_set(o.X));
    if (!o.X_cofinite.empty()) ctx = HNContext::cofinite_except(parse_index_set(o.X_cofinite));
    const Word w = parse_word(o.word);
    HNElement x = hn_reduce_word(w, ctx);
    Json payload{{"construction", "hn"},
                 {"word", to_json(w)},
                 {"context", {{"listed", ctx.listed}, {"cofinite", ctx.cofinite}}},
                 {"element", to_json(x)}};
    write_out(o.out, "bundle", payload);
    std::cout << hn_format(x) << "\n";
    return kPass;
  }
  throw UsageError("unknown construction '" + o.name + "'");
}

int cmd_verify(const Options& o) {
  auto trials = [&](int def) { return o.trials > 0 ? o.trials : def; };
  auto bundle = [&]() {
    return o.bundle.empty() ? squeezed_P_bundle()
                            : square_root_bundle_from_json(read_payload(o.bundle, "bundle"));
  };
  const std::string& s = o.name;
  if (s == "dyn-criterion") {
    if (o.f.empty() != o.g.empty()) throw UsageError("give both --f and --g or neither");
    if (o.f.empty()) return report("Lemma \"dyn criterion\"", dyn_suite(bundle()));
    return report("Lemma \"dyn criterion\"", certificate_rows(check_dyn_certificate(load_mixed(o.f), load_mixed(o.g))));
  }
  if (s == "nested") return report("Lemmas \"nestedL\", \"nestedR\"", nested_suite(bundle()));
  if (s == "mainsub") return report("Prop. \"mainsub\"", mainsub_suite(bundle()));
  if (s == "equation") return report("Lemma \"equation\"", equation_suite(o.seed, trials(100)));
  if (s == "zn") return report("Theorem \"Z^n\"", skew_root_suite(o.seed, o.n > 0 ? o.n : 3));
  if (s == "lamplighter") return report("Theorem \"lamproot\"", lamplighter_suite(o.seed, trials(3)));
  if (s == "hn") return report("Prop. \"neumann\", Cor. \"uncgeneral\"", hn_suite(o.window, o.seed));
  if (s == "kernel-w") return report("Theorem \"uncountable\" (w in the kernel)", kernel_suite());
  if (s == "f-relators") return report("presentations of F", f_relator_suite());
  if (s == "step2") return report("Step 2", step2_suite(step2_inputs(o)));
  if (s == "roots") return report("Lemma \"root\"", root_suite(o.seed, trials(50)));
  if (s == "uncountable") return report("Theorem \"uncountable\"", uncountable_suite(o.seed, trials(10)));
  throw UsageError("unknown suite '" + s + "'");
}

int cmd_eval(const Options& o) {
  if (o.map.empty() == o.word.empty()) throw UsageError("give exactly one of --map and --word");
  Rat x = Rat::parse(o.at);
  if (!o.map.empty()) {
    std::cout << evaluate(load_map(o.map), x).str() << "\n";
    return kPass;
  }
  std::map<std::string, Map> env;
  for (const auto& b : o.bind) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects NAME=FILE, got '" + b + "'");
    env.insert_or_assign(b.substr(0, eq), load_map(b.substr(eq + 1)));
  }
  const Word w = parse_word(o.word);
  for (const auto& syl : w.syllables()) {
    auto it = env.find(syl.gen);
    if (it == env.end()) throw UsageError("generator '" + syl.gen + "' is not bound");
    for (long k = 0; k < std::abs(syl.exp); ++k) x = syl.exp > 0 ? evaluate(it->second, x) : preimage(it->second, x);
  }
  std::cout << x.str() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact PL homeomorphism calculus: builds and certifies square roots, chain groups and roots."};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a named construction and check its certificates");
  build->add_option("name", o.name,
                    "step2 | square-root-of-f | kappa-y | uncountable | skew-root | lamplighter-root | formal-sqrt | hn")
      ->required();
  build->add_option("--out", o.out, "Bundle file");
  build->add_option("--out-f", o.out_f, "step2: write f as a map file");
  build->add_option("--out-g", o.out_g, "step2: write g as a map file");
  build->add_option("--f", o.f, "Map file for f");
  build->add_option("--g", o.g, "Map file for g");
  build->add_option("--h1", o.h1, "id, P (squeezed P generator) or a map file");
  build->add_option("--h2", o.h2, "id, P (squeezed P generator) or a map file");
  build->add_option("--mu", o.mu);
  build->add_option("--nu", o.nu);
  build->add_option("--chi", o.chi);
  build->add_option("--xi", o.xi);
  build->add_option("--h-file", o.h, "skew-root: map files h_1..h_n, in order");
  build->add_option("--n", o.n, "skew-root: number of random h when no --h-file is given");
  build->add_option("--g1", o.g1);
  build->add_option("--g2", o.g2);
  build->add_option("--presentation", o.presentation, "F_ab, F_AB or a presentation file");
  build->add_option("--word", o.word, "hn: word over t and s");
  build->add_option("--X", o.X, "hn: finite set X, comma separated");
  build->add_option("--X-cofinite-except", o.X_cofinite, "hn: X is every positive integer but these");
  build->add_option("--seed", o.seed, "Seed for random inputs");

  auto* verify = app.add_subcommand("verify", "Run a certificate suite");
  verify->add_option("suite", o.name,
                     "dyn-criterion | nested | mainsub | equation | zn | lamplighter | hn | kernel-w | f-relators | "
                     "step2 | roots | uncountable")
      ->required();
  verify->add_option("--bundle", o.bundle, "square-root-of-f bundle file");
  verify->add_option("--f", o.f);
  verify->add_option("--g", o.g);
  verify->add_option("--seed", o.seed);
  verify->add_option("--trials", o.trials);
  verify->add_option("--n", o.n, "zn: largest n");
  verify->add_option("--window", o.window, "hn: index bound");

  auto* eval = app.add_subcommand("eval", "Evaluate a map or a word at a rational");
  eval->add_option("--map", o.map, "Map file, or id");
  eval->add_option("--word", o.word);
  eval->add_option("--bind", o.bind, "NAME=FILE");
  eval->add_option("--at", o.at, "Point p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    return cmd_eval(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *eval ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
