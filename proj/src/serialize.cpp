#include "plh/serialize.hpp"

#include <fstream>

#include "plh/error.hpp"

namespace plh {

namespace {

Json points_to_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(Json::array({to_json(p.x), to_json(p.y)}));
  return out;
}

std::vector<Point> pairs_from_json(const Json& arr) {
  std::vector<Point> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw Error("serialization: breakpoint must be a pair");
    out.push_back({rat_from_json(p[0]), rat_from_json(p[1])});
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("serialization: missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error("serialization: rational must be a \"p/q\" string");
}

Json to_json(const IntervalQ& j) {
  return Json{{"lo", j.lo ? to_json(*j.lo) : Json(nullptr)},
              {"hi", j.hi ? to_json(*j.hi) : Json(nullptr)},
              {"lo_closed", j.lo_closed},
              {"hi_closed", j.hi_closed}};
}

IntervalQ interval_from_json(const Json& j) {
  std::optional<Rat> lo, hi;
  if (!field(j, "lo").is_null()) lo = rat_from_json(j.at("lo"));
  if (!field(j, "hi").is_null()) hi = rat_from_json(j.at("hi"));
  return {lo, hi, j.value("lo_closed", false), j.value("hi_closed", false)};
}

Json to_json(const ETPL& f) {
  return Json{{"class", "etpl"},
              {"breakpoints", points_to_json(f.breakpoints())},
              {"left_offset", to_json(f.left_offset())},
              {"right_offset", to_json(f.right_offset())}};
}

ETPL etpl_from_json(const Json& j) {
  if (field(j, "class") != "etpl") throw Error("serialization: expected class etpl");
  return ETPL(pairs_from_json(field(j, "breakpoints")), rat_from_json(field(j, "left_offset")),
              rat_from_json(field(j, "right_offset")));
}

Json to_json(const Map& f) {
  if (const auto* e = std::get_if<ETPL>(&f)) return to_json(*e);
  if (const auto* p = std::get_if<PeriodicPL>(&f))
    return Json{{"class", "periodic"},
                {"period", to_json(p->period())},
                {"breakpoints", points_to_json(p->breakpoints())},
                {"shift", to_json(p->shift())}};
  if (const auto* r = std::get_if<RootPL>(&f)) {
    Json div = Json::array();
    for (const auto& d : r->divisions()) div.push_back(to_json(d));
    Json pieces = Json::array();
    for (const auto& piece : r->pieces()) pieces.push_back(points_to_json(piece));
    return Json{{"class", "root"},
                {"base", to_json(r->base())},
                {"degree", r->degree()},
                {"anchor", to_json(r->anchor())},
                {"divisions", div},
                {"pieces", pieces}};
  }
  if (const auto* c = std::get_if<CompactifiedMap>(&f))
    return Json{{"class", "compactified"}, {"target", to_json(c->target())}, {"inner", to_json(c->inner())}};
  const auto& w = std::get<PiecewiseHomeo>(f);
  Json parts = Json::array();
  for (const auto& p : w.parts()) {
    Map rep = std::visit([](const auto& m) -> Map { return m; }, p.rep);
    parts.push_back(Json{{"region", to_json(p.region)}, {"rep", to_json(rep)}});
  }
  return Json{{"class", "piecewise"}, {"parts", parts}};
}

Map map_from_json(const Json& j) {
  const std::string cls = field(j, "class").get<std::string>();
  if (cls == "etpl") return etpl_from_json(j);
  if (cls == "periodic")
    return PeriodicPL(rat_from_json(field(j, "period")), pairs_from_json(field(j, "breakpoints")),
                      j.contains("shift") ? rat_from_json(j.at("shift")) : Rat(0));
  if (cls == "root") {
    std::vector<Rat> div;
    for (const auto& d : field(j, "divisions")) div.push_back(rat_from_json(d));
    std::vector<std::vector<Point>> pieces;
    for (const auto& p : field(j, "pieces")) pieces.push_back(pairs_from_json(p));
    return nth_root(etpl_from_json(field(j, "base")), field(j, "degree").get<int>(), rat_from_json(field(j, "anchor")),
                    std::move(div), std::move(pieces));
  }
  if (cls == "compactified")
    return CompactifiedMap(interval_from_json(field(j, "target")), etpl_from_json(field(j, "inner")));
  if (cls == "piecewise") {
    std::vector<Part> parts;
    for (const auto& p : field(j, "parts")) {
      Map rep = map_from_json(field(p, "rep"));
      IntervalQ region = interval_from_json(field(p, "region"));
      if (const auto* e = std::get_if<ETPL>(&rep)) parts.push_back({region, *e});
      else if (const auto* c = std::get_if<CompactifiedMap>(&rep)) parts.push_back({region, *c});
      else throw Error("serialization: piecewise parts must be etpl or compactified");
    }
    return PiecewiseHomeo(std::move(parts));
  }
  throw Error("serialization: unknown map class '" + cls + "'");
}

Json make_artifact(const std::string& kind, Json payload) {
  return Json{{"format_version", kFormatVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

Json artifact_payload(const Json& artifact, const std::string& kind) {
  if (field(artifact, "format_version") != kFormatVersion)
    throw Error("serialization: unsupported format_version " + artifact.at("format_version").dump());
  if (field(artifact, "kind") != kind)
    throw Error("serialization: expected a " + kind + " artifact, got " + artifact.at("kind").dump());
  return field(artifact, "payload");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path);
}

}  // namespace plh
